#include "folindex/factor.hpp"

#include <algorithm>
#include <functional>

#include "folindex/errors.hpp"
#include "folindex/exactcore.hpp"

namespace folindex {

namespace {

constexpr int kMaxFactorDegree = 40;

using ZPoly = std::vector<mpz_class>;  // low to high

void trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

void reduce_mod(ZPoly& a, const mpz_class& p) {
    for (auto& c : a) {
        c %= p;
        if (c < 0) c += p;
    }
    trim(a);
}

ZPoly mul_mod(const ZPoly& a, const ZPoly& b, const mpz_class& p) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    reduce_mod(r, p);
    return r;
}

mpz_class inv_mod(const mpz_class& a, const mpz_class& p) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0) throw std::domain_error("not invertible mod p");
    return r;
}

// Remainder of a by b (b nonzero) modulo p; quotient optional.
ZPoly rem_mod(ZPoly a, const ZPoly& b, const mpz_class& p, ZPoly* quot = nullptr) {
    const int db = deg(b);
    const mpz_class inv = inv_mod(b.back(), p);
    if (quot) quot->assign(static_cast<size_t>(std::max(0, deg(a) - db + 1)), 0);
    for (int k = deg(a); k >= db; --k) {
        mpz_class f = a[static_cast<size_t>(k)] * inv % p;
        if (f == 0) continue;
        if (quot) (*quot)[static_cast<size_t>(k - db)] = f;
        for (int j = 0; j <= db; ++j) {
            auto& t = a[static_cast<size_t>(k - db + j)];
            t = (t - f * b[static_cast<size_t>(j)]) % p;
        }
    }
    if (static_cast<int>(a.size()) > db) a.resize(static_cast<size_t>(std::max(0, db)));
    reduce_mod(a, p);
    if (quot) trim(*quot);
    return a;
}

ZPoly monic_mod(const ZPoly& a, const mpz_class& p) {
    if (a.empty()) return a;
    const mpz_class inv = inv_mod(a.back(), p);
    ZPoly r = a;
    for (auto& c : r) c = c * inv % p;
    return r;
}

ZPoly gcd_mod(ZPoly a, ZPoly b, const mpz_class& p) {
    while (!b.empty()) {
        ZPoly r = rem_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic_mod(a, p);
}

ZPoly sub_mod(ZPoly a, const ZPoly& b, const mpz_class& p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    reduce_mod(a, p);
    return a;
}

ZPoly powmod(ZPoly base, mpz_class e, const ZPoly& f, const mpz_class& p) {
    ZPoly acc{1};
    base = rem_mod(base, f, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = rem_mod(mul_mod(acc, base, p), f, p);
        e >>= 1;
        if (e > 0) base = rem_mod(mul_mod(base, base, p), f, p);
    }
    return acc;
}

ZPoly derivative(const ZPoly& a) {
    ZPoly d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<unsigned long>(i));
    trim(d);
    return d;
}

void equal_degree_split(const ZPoly& g, int d, const mpz_class& p, gmp_randclass& rng, std::vector<ZPoly>& out) {
    if (deg(g) == d) {
        out.push_back(g);
        return;
    }
    mpz_class pd;
    mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    const mpz_class e = (pd - 1) / 2;
    for (;;) {
        ZPoly a(static_cast<size_t>(deg(g)));
        for (auto& c : a) c = rng.get_z_range(p);
        trim(a);
        if (deg(a) < 1) continue;
        ZPoly b = sub_mod(powmod(a, e, g, p), ZPoly{1}, p);
        ZPoly c = gcd_mod(b, g, p);
        if (deg(c) > 0 && deg(c) < deg(g)) {
            ZPoly q;
            rem_mod(g, c, p, &q);
            equal_degree_split(c, d, p, rng, out);
            equal_degree_split(monic_mod(q, p), d, p, rng, out);
            return;
        }
    }
}

// Monic irreducible factors of a square-free monic f modulo p.
std::vector<ZPoly> factor_mod(ZPoly f, const mpz_class& p) {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(20240611UL);
    std::vector<ZPoly> out;
    ZPoly h{0, 1};
    for (int d = 1; 2 * d <= deg(f); ++d) {
        h = powmod(h, p, f, p);
        ZPoly g = gcd_mod(sub_mod(h, ZPoly{0, 1}, p), f, p);
        if (deg(g) > 0) {
            equal_degree_split(g, d, p, rng, out);
            ZPoly q;
            rem_mod(f, g, p, &q);
            f = q;
            h = rem_mod(h, f, p);
        }
    }
    if (deg(f) > 0) out.push_back(monic_mod(f, p));
    return out;
}

mpz_class content(const ZPoly& a) {
    mpz_class g = 0;
    for (const auto& c : a) g = gcd(g, c);
    return g;
}

ZPoly primitive(ZPoly a) {
    mpz_class g = content(a);
    if (g != 0)
        for (auto& c : a) c /= g;
    if (!a.empty() && a.back() < 0)
        for (auto& c : a) c = -c;
    return a;
}

ZPoly symmetric(ZPoly a, const mpz_class& p) {
    const mpz_class half = p / 2;
    for (auto& c : a)
        if (c > half) c -= p;
    trim(a);
    return a;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// Irreducible factors over Z of a square-free primitive f with positive leading coefficient.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
    const int n = deg(f);
    if (n <= 1) return {f};
    mpz_class maxc = 0;
    for (const auto& c : f) maxc = std::max(maxc, mpz_class(abs(c)));
    mpz_class bound = 2 * abs(f.back()) * maxc * (n + 1);
    bound <<= static_cast<mp_bitcnt_t>(n);

    std::vector<ZPoly> best;
    mpz_class best_p;
    mpz_class p = bound;
    for (int attempt = 0; attempt < 3; ++attempt) {
        for (;;) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            if (f.back() % p == 0) continue;
            ZPoly fm = f;
            reduce_mod(fm, p);
            if (deg(gcd_mod(fm, derivative(fm), p)) == 0) break;
        }
        ZPoly fm = f;
        reduce_mod(fm, p);
        auto facs = factor_mod(monic_mod(fm, p), p);
        if (best.empty() || facs.size() < best.size()) {
            best = std::move(facs);
            best_p = p;
        }
        if (best.size() <= 2) break;
    }
    p = best_p;

    std::vector<ZPoly> result;
    std::vector<ZPoly> rest = best;
    ZPoly F = f;
    for (size_t s = 1; 2 * s <= rest.size();) {
        bool found = false;
        std::vector<size_t> idx(s);
        std::function<bool(size_t, size_t)> search = [&](size_t start, size_t depth) -> bool {
            if (depth == s) {
                const mpz_class lc = F.back();
                ZPoly g{lc}, h{lc};
                std::vector<bool> in(rest.size(), false);
                for (size_t k : idx) in[k] = true;
                for (size_t k = 0; k < rest.size(); ++k) (in[k] ? g : h) = mul_mod(in[k] ? g : h, rest[k], p);
                g = symmetric(g, p);
                h = symmetric(h, p);
                ZPoly lf = F;
                for (auto& c : lf) c *= lc;
                if (mul(g, h) != lf) return false;
                result.push_back(primitive(g));
                F = primitive(h);
                std::vector<ZPoly> keep;
                for (size_t k = 0; k < rest.size(); ++k)
                    if (!in[k]) keep.push_back(rest[k]);
                rest = std::move(keep);
                return true;
            }
            for (size_t k = start; k < rest.size(); ++k) {
                idx[depth] = k;
                if (search(k + 1, depth + 1)) return true;
            }
            return false;
        };
        found = search(0, 0);
        if (!found) ++s;
    }
    if (deg(F) > 0) result.push_back(primitive(F));
    return result;
}

QPoly to_qpoly_monic(const ZPoly& z) {
    std::vector<mpq_class> c;
    for (const auto& v : z) c.emplace_back(v);
    return QPoly(std::move(c)).monic();
}

ZPoly to_zpoly(const QPoly& q) {
    mpz_class den = 1;
    for (const auto& c : q.coeffs()) den = lcm(den, mpz_class(c.get_den()));
    ZPoly z;
    for (const auto& c : q.coeffs()) z.push_back(mpz_class(c * den));
    return primitive(z);
}

}  // namespace

std::vector<std::pair<QPoly, int>> factor_rational(const QPoly& f) {
    if (f.degree() > kMaxFactorDegree)
        throw ResourceCapError("factor-degree", "factorization over Q capped at degree " + std::to_string(kMaxFactorDegree));
    std::vector<std::pair<QPoly, int>> out;
    for (const auto& [g, mult] : squarefree_decomposition(f)) {
        for (const auto& z : zassenhaus(to_zpoly(g))) out.emplace_back(to_qpoly_monic(z), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return to_string(a.first, "z") < to_string(b.first, "z");
    });
    return out;
}

std::vector<mpq_class> rational_roots(const QPoly& f) {
    std::vector<mpq_class> roots;
    for (const auto& [g, m] : factor_rational(f))
        if (g.degree() == 1) roots.push_back(-g.coeff(0));
    return roots;
}

KPoly to_kpoly(const QPoly& p) {
    std::vector<FieldElem> c;
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return KPoly(std::move(c));
}

std::vector<std::pair<KPoly, int>> factor_over_field(const KPoly& f, const FieldPtr& field) {
    std::vector<std::pair<KPoly, int>> out;
    if (field->is_rational()) {
        std::vector<mpq_class> c;
        for (const auto& v : f.coeffs()) c.push_back(v.rational_value());
        for (const auto& [g, m] : factor_rational(QPoly(std::move(c)))) out.emplace_back(to_kpoly(g), m);
        return out;
    }
    if (f.degree() * field->degree() > kMaxFactorDegree)
        throw ResourceCapError("factor-degree", "norm degree exceeds the factorization cap");
    const FieldElem theta = FieldElem::generator(field);
    const std::vector<std::string> vars{"theta_", "z_"};
    const MultiPoly m = [&] {
        MultiPoly r(vars);
        const auto& mc = field->minimal_polynomial().coeffs();
        for (size_t k = 0; k < mc.size(); ++k) r.add_term(Exponent{static_cast<int>(k), 0}, FieldElem(mc[k]));
        return r;
    }();
    const MultiPoly th = MultiPoly::variable(vars, 0), z = MultiPoly::variable(vars, 1);
    for (const auto& [g, mult] : squarefree_decomposition(f)) {
        if (g.degree() == 1) {
            out.emplace_back(g, mult);
            continue;
        }
        bool done = false;
        for (long s = 0; s < 64 && !done; ++s) {
            // G(theta, z) = g(z - s*theta) with coefficients lifted to Q[theta].
            MultiPoly G(vars), shifted = z - MultiPoly::constant(vars, FieldElem(s)) * th;
            MultiPoly pw = MultiPoly::constant(vars, FieldElem(1));
            for (int k = 0; k <= g.degree(); ++k) {
                MultiPoly ck(vars);
                const FieldElem gk = g.coeff(k);
                const auto& cc = gk.coefficients();
                for (size_t j = 0; j < cc.size(); ++j) ck.add_term(Exponent{static_cast<int>(j), 0}, FieldElem(cc[j]));
                G += ck * pw;
                pw = pw * shifted;
            }
            const MultiPoly N = resultant(m, G, 0);
            std::vector<mpq_class> nc(static_cast<size_t>(N.degree_in(1) + 1));
            for (const auto& [e, c] : N.terms()) nc[static_cast<size_t>(e[1])] = c.rational_value();
            const QPoly norm(std::move(nc));
            if (gcd(norm, norm.derivative()).degree() > 0) continue;
            done = true;
            const KPoly shift_back(std::vector<FieldElem>{FieldElem(s) * theta, FieldElem(1)});
            for (const auto& [ni, one] : factor_rational(norm)) {
                KPoly h = gcd(g, to_kpoly(ni).compose(shift_back));
                if (h.degree() > 0) out.emplace_back(h, mult);
            }
        }
        if (!done) throw ResourceCapError("norm-shift", "no square-free norm found for Trager factorization");
    }
    return out;
}

std::vector<std::pair<FieldElem, int>> roots_in_field(const KPoly& f, const FieldPtr& field) {
    std::vector<std::pair<FieldElem, int>> roots;
    for (const auto& [g, m] : factor_over_field(f, field))
        if (g.degree() == 1) roots.emplace_back(-g.coeff(0), m);
    return roots;
}

}  // namespace folindex
