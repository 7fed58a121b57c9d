#include "folindex/localmult.hpp"

#include "folindex/errors.hpp"

namespace folindex {

namespace {

constexpr int kDepthLimit = 10000;

// F restricted to y = 0 as a univariate polynomial in x.
UPoly<FieldElem> on_x_axis(const MultiPoly& F) {
    std::vector<FieldElem> c(static_cast<size_t>(std::max(0, F.degree_in(0) + 1)));
    for (const auto& [e, v] : F.terms())
        if (e[1] == 0) c[static_cast<size_t>(e[0])] = v;
    return UPoly<FieldElem>(std::move(c));
}

// Scales G by a nonzero constant to keep coefficients small: primitive integer
// form over Q, monic over an extension. The ideal is unchanged.
MultiPoly tidy(const MultiPoly& G) {
    if (G.is_zero()) return G;
    if (!G.field()->is_rational()) return normalized(G);
    mpz_class num = 0, den = 1;
    for (const auto& [e, c] : G.terms()) {
        const mpq_class q = c.rational_value();
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    }
    mpq_class scale(den, num);
    scale.canonicalize();
    return FieldElem(scale) * G;
}

struct Fulton {
    int steps = 0;

    void tick() {
        if (++steps > kDepthLimit)
            throw ResourceCapError("recursion-depth", "intersection multiplicity recursion exceeded 10^4 steps");
    }

    // Returns -1 for infinity.
    long run(MultiPoly F, MultiPoly G) {
        long acc = 0;
        for (;;) {
            tick();
            if (!F.constant_term().is_zero() || !G.constant_term().is_zero()) return acc;
            auto f0 = on_x_axis(F), g0 = on_x_axis(G);
            if (!f0.is_zero() && g0.is_zero()) {
                std::swap(F, G);
                std::swap(f0, g0);
            }
            if (f0.is_zero()) {
                // F = y*H: I(y, G) + I(H, G).
                if (g0.is_zero()) return -1;
                acc += g0.valuation();
                F = F.shift(1, -1);
                continue;
            }
            if (f0.degree() > g0.degree()) {
                std::swap(F, G);
                std::swap(f0, g0);
            }
            const int r = f0.degree(), s = g0.degree();
            MultiPoly G1 = f0.lc() * G - g0.lc() * F.shift(0, s - r);
            if (G1.is_zero()) return -1;
            G = tidy(G1);
        }
    }
};

}  // namespace

LocalMultiplicity intersection_multiplicity_at_origin(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero() || g.is_zero()) throw PreconditionError("zero-input", "intersection multiplicity with the zero polynomial");
    if (f.nvars() != 2 || f.vars() != g.vars())
        throw PreconditionError("variable-mismatch", "intersection multiplicity needs two polynomials in the same two variables");
    if (!f.constant_term().is_zero() || !g.constant_term().is_zero()) return LocalMultiplicity::finite(0);
    // A common component through the origin makes the recursion cycle; detect it up front.
    if (gcd(f, g).constant_term().is_zero()) return LocalMultiplicity::infinity();
    const long v = Fulton{}.run(f, g);
    return v < 0 ? LocalMultiplicity::infinity() : LocalMultiplicity::finite(v);
}

LocalMultiplicity intersection_multiplicity(const MultiPoly& f, const MultiPoly& g, const Point& p) {
    if (f.is_zero() || g.is_zero()) throw PreconditionError("zero-input", "intersection multiplicity with the zero polynomial");
    return intersection_multiplicity_at_origin(translate_to_origin(f, p), translate_to_origin(g, p));
}

long milnor_number(const MultiPoly& f, const Point& p) {
    const MultiPoly F = translate_to_origin(f, p);
    if (!F.constant_term().is_zero()) throw PreconditionError("not-on-curve", "the point does not lie on " + f.to_string());
    const MultiPoly fx = F.derivative(0), fy = F.derivative(1);
    if (!fx.constant_term().is_zero() || !fy.constant_term().is_zero()) return 0;
    if (fx.is_zero() || fy.is_zero())
        throw PreconditionError("non-isolated", "singularity of " + f.to_string() + " is not isolated");
    const auto m = intersection_multiplicity_at_origin(fx, fy);
    if (m.infinite) throw PreconditionError("non-isolated", "singularity of " + f.to_string() + " is not isolated");
    return m.value;
}

int curve_multiplicity(const MultiPoly& f, const Point& p) {
    if (f.is_zero()) throw PreconditionError("zero-input", "multiplicity of the zero polynomial");
    return translate_to_origin(f, p).order();
}

std::vector<LocalMultiplicity> intersection_multiplicities(const std::vector<std::pair<MultiPoly, MultiPoly>>& pairs,
                                                          const Point& p, Exec exec) {
    return map_indexed<LocalMultiplicity>(
        pairs.size(), [&](size_t i) { return intersection_multiplicity(pairs[i].first, pairs[i].second, p); }, exec);
}

}  // namespace folindex
