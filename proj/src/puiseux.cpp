#include "folindex/puiseux.hpp"

#include <cstdlib>
#include <map>
#include <numeric>

#include "folindex/factor.hpp"

namespace folindex {

namespace {

// One Newton-polygon step: X = xc * X1^q, Y = X1^p * (yc + Y1).
struct Stage {
    FieldElem xc;
    int q;
    int p;
    FieldElem yc;
};

struct Expander {
    int N;
    std::vector<Branch> out;

    // Branch from the chain and the last-stage series Y_k(T), with X_k = T.
    void emit(const std::vector<Stage>& chain, PowerSeries S, const FieldPtr& K, int conj) {
        FieldElem c = FieldElem(1).promoted(K);
        int e = 1;
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            // Y_prev = c^p T^{e p} (yc + Y)
            PowerSeries inner = PowerSeries::constant(N, it->yc) + S;
            S = PowerSeries::monomial(N, c.pow(it->p), e * it->p) * inner;
            c = it->xc * c.pow(it->q);
            e *= it->q;
        }
        if (e >= N) throw InsufficientPrecision(N, "branch x-exponent " + std::to_string(e) + " exceeds truncation");
        Branch b;
        b.field = K;
        b.x = PowerSeries::monomial(N, c, e);
        b.y = S;
        const int oy = S.order();
        b.multiplicity = oy < 0 ? e : std::min(e, oy);
        b.conjugacy_size = conj;
        out.push_back(std::move(b));
    }

    // Simple root in Y at X = 0: Newton iteration for Y(T).
    void emit_smooth(const MultiPoly& G, const std::vector<Stage>& chain, int conj) {
        const FieldPtr& K = G.field();
        const MultiPoly Gy = G.derivative(1);
        const PowerSeries T = PowerSeries::monomial(N, FieldElem(1).promoted(K), 1);
        PowerSeries S(N, K);
        for (int prec = 1; prec < 2 * N; prec *= 2) {
            const PowerSeries v = substitute_series(G, {T, S});
            if (v.is_zero_to_truncation()) break;
            S = S - v * substitute_series(Gy, {T, S}).inverse();
        }
        if (!substitute_series(G, {T, S}).is_zero_to_truncation())
            throw std::logic_error("Newton iteration did not converge");
        emit(chain, S, K, conj);
    }

    void expand(const MultiPoly& G, const std::vector<Stage>& chain, int conj) {
        std::map<int, int> imin;  // y-exponent -> least x-exponent
        for (const auto& [e, c] : G.terms()) {
            auto it = imin.find(e[1]);
            if (it == imin.end())
                imin.emplace(e[1], e[0]);
            else
                it->second = std::min(it->second, e[0]);
        }
        int j0 = -1;
        for (const auto& [j, i] : imin)
            if (i == 0) {
                j0 = j;
                break;
            }
        if (j0 < 0) throw std::logic_error("transformed curve lost its y-axis term");
        if (j0 == 0) return;
        if (j0 == 1) {
            emit_smooth(G, chain, conj);
            return;
        }
        const int jmin = imin.begin()->first;
        if (jmin >= 2) throw PreconditionError("non-reduced", "curve has a repeated branch");
        if (jmin == 1) emit(chain, PowerSeries(N, G.field()), G.field(), conj);

        int ic = 0, jc = j0;
        while (jc > jmin) {
            int ib = -1, jb = -1;
            mpq_class best;
            for (const auto& [j, i] : imin) {
                if (j >= jc) break;
                mpq_class slope(i - ic, jc - j);
                slope.canonicalize();
                if (ib < 0 || slope < best || (slope == best && j < jb)) {
                    best = slope;
                    ib = i;
                    jb = j;
                }
            }
            process_edge(G, chain, conj, ic, jc, ib, jb);
            ic = ib;
            jc = jb;
        }
    }

    void process_edge(const MultiPoly& G, const std::vector<Stage>& chain, int conj, int i1, int j1, int i2, int j2) {
        const int di = i2 - i1, dj = j1 - j2, g = std::gcd(di, dj);
        const int p = di / g, q = dj / g, m = q * i1 + p * j1;
        const FieldPtr& K = G.field();
        std::vector<FieldElem> phi(static_cast<size_t>(dj / q + 1), FieldElem(0).promoted(K));
        for (const auto& [e, c] : G.terms())
            if (q * e[0] + p * e[1] == m) phi[static_cast<size_t>((e[1] - j2) / q)] = c;
        const KPoly Phi(std::move(phi));

        for (const auto& [psi, r] : factor_over_field(Phi, K)) {
            FieldPtr K2 = K;
            FieldElem xi;
            int conj2 = conj;
            if (psi.degree() == 1) {
                xi = -psi.coeff(0);
            } else if (K->is_rational()) {
                std::vector<mpq_class> qc;
                for (const auto& c : psi.coeffs()) qc.push_back(c.rational_value());
                K2 = FieldDescriptor::extension("xi", QPoly(std::move(qc)));
                xi = FieldElem::generator(K2);
                conj2 = conj * psi.degree();
            } else {
                std::string s;
                {
                    std::vector<std::string> zv{"Z"};
                    s = MultiPoly::from_univariate(zv, 0, psi).to_string();
                }
                throw ExtensionRequired(s, "Newton polygon edge over " + K->describe());
            }
            int u = 1, v = q - 1;
            if (p > 1) {
                u = 1;
                while ((u * q) % p != 1) ++u;
                v = (u * q - 1) / p;
            }
            const FieldElem xc = xi.pow(v), yc = xi.pow(u);
            const auto& vars = G.vars();
            const MultiPoly X = MultiPoly::variable(vars, 0), Y = MultiPoly::variable(vars, 1);
            std::map<std::string, MultiPoly> sub{{vars[0], xc * X.pow(q)},
                                                 {vars[1], X.pow(p) * (MultiPoly::constant(vars, yc) + Y)}};
            const MultiPoly G1 = substitute(G.promoted(K2), sub).shift(0, -m);
            std::vector<Stage> chain2 = chain;
            chain2.push_back({xc, q, p, yc});
            expand(G1, chain2, conj2);
            (void)r;
        }
    }
};

int gcd_of_exponents(const Branch& b) {
    int g = b.x.order();
    for (int k = 0; k < b.y.truncation(); ++k)
        if (!b.y[k].is_zero()) g = std::gcd(g, k);
    return g;
}

}  // namespace

std::string Branch::to_string() const {
    return "(" + x.to_string() + ", " + y.to_string() + ") m=" + std::to_string(multiplicity) +
           " conj=" + std::to_string(conjugacy_size);
}

int precision_cap() {
    if (const char* env = std::getenv("FOLINDEX_PRECISION_CAP")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 512;
}

int initial_precision(const MultiPoly& f) { return std::max(8, 2 * f.total_degree()); }

std::vector<Branch> branches(const MultiPoly& f, const Point& p, int precision) {
    if (precision < 1) throw PreconditionError("bad-precision", "precision must be at least 1");
    if (f.nvars() != 2) throw PreconditionError("variable-mismatch", "branches need a polynomial in two variables");
    const MultiPoly F = translate_to_origin(f, p);
    if (F.is_zero()) throw PreconditionError("zero-input", "branches of the zero polynomial");
    if (!F.constant_term().is_zero()) throw PreconditionError("not-on-curve", "the point does not lie on " + f.to_string());
    if (!is_squarefree(F)) throw PreconditionError("non-reduced", f.to_string() + " is not reduced");

    Expander ex{precision, {}};
    MultiPoly G = F;
    if (F.valuation_in(0) == 1) {
        Branch b;
        b.field = F.field();
        b.x = PowerSeries(precision, F.field());
        b.y = PowerSeries::monomial(precision, FieldElem(1).promoted(F.field()), 1);
        b.multiplicity = 1;
        ex.out.push_back(std::move(b));
        G = F.shift(0, -1);
    }
    if (!G.is_constant() && G.constant_term().is_zero()) ex.expand(G, {}, 1);

    int total = 0;
    for (auto& b : ex.out) {
        b.base = p;
        b.curve = F;
        total += b.multiplicity * b.conjugacy_size;
        if (gcd_of_exponents(b) != 1) throw InsufficientPrecision(precision, "branch parametrization not yet primitive");
        if (!substitute_series(F, {b.x, b.y}).is_zero_to_truncation())
            throw std::logic_error("branch does not satisfy the curve equation");
    }
    if (total != F.order()) throw std::logic_error("branch multiplicities do not add up to the curve multiplicity");
    return ex.out;
}

BranchOrder ord_along_branch(const Branch& b, const MultiPoly& g) {
    const PowerSeries s = substitute_series(translate_to_origin(g, b.base), {b.x, b.y});
    const int o = s.order();
    return o < 0 ? BranchOrder{true, 0} : BranchOrder{false, o};
}

int nash_lift_order(const Branch& b, const MultiPoly& a, const MultiPoly& bb) {
    const MultiPoly A = translate_to_origin(a, b.base), B = translate_to_origin(bb, b.base);
    const MultiPoly& f = b.curve;
    const int N = b.truncation();
    const PowerSeries As = substitute_series(A, {b.x, b.y}), Bs = substitute_series(B, {b.x, b.y});

    // Tangency, coefficientwise: A y' - B x' must vanish.
    const PowerSeries W = As.truncated(N - 1) * b.y.derivative() - Bs.truncated(N - 1) * b.x.derivative();
    if (!W.is_zero_to_truncation())
        throw PreconditionError("non-tangent", "vector field (" + a.to_string() + ", " + bb.to_string() +
                                                   ") is not tangent to a branch of " + f.to_string());
    // nu(f) vanishes on the branch to an order beyond the Bezout bound only if it contains the branch.
    const MultiPoly nuf = A * f.derivative(0) + B * f.derivative(1);
    if (!nuf.is_zero() && N <= f.total_degree() * nuf.total_degree())
        if (substitute_series(nuf, {b.x, b.y}).is_zero_to_truncation())
            throw InsufficientPrecision(N, "tangency not yet certified");

    const int oa = As.order(), ob = Bs.order();
    if (oa < 0 && ob < 0) {
        if (N > f.total_degree() * std::max(A.total_degree(), B.total_degree()))
            throw PreconditionError("zero-field", "vector field vanishes identically along a branch of " + f.to_string());
        throw InsufficientPrecision(N, "vector field order along branch");
    }
    if (oa < 0) return ob;
    if (ob < 0) return oa;
    return std::min(oa, ob);
}

LocalMultiplicity intersection_multiplicity_puiseux(const MultiPoly& f, const MultiPoly& g, const Point& p) {
    const MultiPoly F = translate_to_origin(f, p), G = translate_to_origin(g, p);
    if (F.is_zero() || G.is_zero()) throw PreconditionError("zero-input", "intersection multiplicity with the zero polynomial");
    if (!F.constant_term().is_zero() || !G.constant_term().is_zero()) return LocalMultiplicity::finite(0, "puiseux-oracle");
    const int bound = F.total_degree() * G.total_degree();
    return with_adaptive_precision(initial_precision(F), [&](int N) {
        long total = 0;
        for (const auto& b : branches(F, Point(2, FieldElem(0)), N)) {
            const BranchOrder o = ord_along_branch(b, G);
            if (o.zero_to_truncation) {
                if (N > bound) return LocalMultiplicity::infinity("puiseux-oracle");
                throw InsufficientPrecision(N, "order along branch");
            }
            total += static_cast<long>(b.conjugacy_size) * o.value;
        }
        return LocalMultiplicity::finite(total, "puiseux-oracle");
    });
}

}  // namespace folindex
