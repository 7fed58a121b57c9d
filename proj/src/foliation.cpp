#include "folindex/foliation.hpp"

#include "folindex/errors.hpp"
#include "folindex/factor.hpp"

namespace folindex {

namespace {

constexpr int kMaxShears = 16;

MultiPoly var(const std::vector<std::string>& vars, int i) { return MultiPoly::variable(vars, i); }

void require_rational(const MultiPoly& p) {
    if (!p.field()->is_rational())
        throw PreconditionError("rational-coefficients-required", "projective computations need coefficients in QQ");
}

// Homogenize to degree d in x, y, z (p in the affine chart x, y).
MultiPoly homog(const MultiPoly& p, int d) {
    return homogenize(p.renamed({"x", "y"}), "z", d);
}

MultiPoly saturate(const MultiPoly& a, const MultiPoly& b, MultiPoly& b_out) {
    const MultiPoly g = gcd(a, b);
    if (g.is_constant()) {
        b_out = b;
        return a;
    }
    b_out = b.exact_div(g);
    return a.exact_div(g);
}

QPoly to_qpoly(const MultiPoly& p, int var_index) {
    std::vector<mpq_class> c;
    const auto u = p.to_univariate(var_index);
    for (const auto& k : u.coeffs()) c.push_back(k.rational_value());
    return QPoly(std::move(c));
}

// Roots of an irreducible factor: rational root, or the generator of a fresh extension.
std::pair<FieldPtr, FieldElem> root_of(const QPoly& phi) {
    if (phi.degree() == 1) return {FieldDescriptor::rationals(), FieldElem(-phi.coeff(0) / phi.coeff(1))};
    FieldPtr K = FieldDescriptor::extension("w", phi);
    return {K, FieldElem::generator(K)};
}

// Specialize p(x, y) at x = theta, as a polynomial in y over theta's field.
KPoly specialize_x(const MultiPoly& p, const FieldElem& theta) {
    std::vector<FieldElem> c;
    const Point at{theta, FieldElem(0)};
    for (const auto& k : p.coefficients_in(1)) c.push_back(k.evaluate(at));
    return KPoly(std::move(c));
}

bool all_vanish(const std::vector<MultiPoly>& gens, const Point& p) {
    for (const auto& g : gens)
        if (!g.promoted(p.front().field()).evaluate(p).is_zero()) return false;
    return true;
}

std::vector<ProjPoint> univariate_zeros(const QPoly& g, int chart, bool x_coordinate) {
    std::vector<ProjPoint> out;
    if (g.is_zero()) throw PreconditionError("non-isolated", "zero set contains a curve");
    for (const auto& [phi, mult] : factor_rational(g)) {
        (void)mult;
        auto [K, r] = root_of(phi);
        Point c = x_coordinate ? Point{r, FieldElem(0).promoted(K)} : Point{FieldElem(0).promoted(K), r};
        out.push_back({chart, K, c, phi.degree()});
    }
    return out;
}

// Two coprime combinations of the generators; their common zeros contain the zero set.
std::pair<MultiPoly, MultiPoly> coprime_pair(const std::vector<MultiPoly>& gens) {
    if (gens.size() < 2) throw PreconditionError("non-isolated", "a single equation defines a curve, not points");
    for (long c = 0; c < 8; ++c) {
        MultiPoly A = gens[0], B = gens[1];
        for (size_t i = 2; i < gens.size(); ++i) {
            A += FieldElem(c + static_cast<long>(i)) * gens[i];
            B += FieldElem(c * c + 1) * gens[i];
        }
        if (c > 0) B += FieldElem(c) * gens[0];
        if (gcd(A, B).is_constant()) return {A, B};
    }
    throw PreconditionError("non-isolated", "equations share a common curve component");
}

std::vector<ProjPoint> affine_zeros(const std::vector<MultiPoly>& gens0) {
    std::vector<MultiPoly> gens;
    for (const auto& g : gens0) {
        require_rational(g);
        if (!g.is_zero()) gens.push_back(g);
    }
    for (const auto& g : gens)
        if (g.is_constant()) return {};
    if (gens.empty()) throw PreconditionError("non-isolated", "every point is a zero");
    const auto [A, B] = coprime_pair(gens);
    const auto& vars = A.vars();
    const MultiPoly X = var(vars, 0), Y = var(vars, 1);

    // Shear x -> x - c y until every x-value carries a single point.
    for (int i = 0; i < kMaxShears; ++i) {
        const long c = (i % 2 == 1) ? (i + 1) / 2 : -(i / 2);
        const std::map<std::string, MultiPoly> sh{{vars[0], X - FieldElem(c) * Y}, {vars[1], Y}};
        const MultiPoly Ac = substitute(A, sh), Bc = substitute(B, sh);
        if (Ac.degree_in(1) <= 0 && Bc.degree_in(1) <= 0) return {};  // coprime in x alone: no common zero
        const MultiPoly r = resultant(Ac, Bc, 1);
        if (r.is_constant()) return {};
        std::vector<ProjPoint> out;
        bool separated = true;
        for (const auto& [phi, mult] : factor_rational(to_qpoly(r, 0))) {
            (void)mult;
            auto [K, theta] = root_of(phi);
            const KPoly g = squarefree_part(gcd(specialize_x(Ac.promoted(K), theta), specialize_x(Bc.promoted(K), theta)));
            if (g.degree() <= 0) continue;
            if (g.degree() > 1) {
                separated = false;
                break;
            }
            const FieldElem y0 = -(g.coeff(0) / g.coeff(1));
            Point p{theta - FieldElem(c).promoted(K) * y0, y0};
            if (all_vanish(gens, p)) out.push_back({0, K, p, phi.degree()});
        }
        if (separated) return out;
    }
    throw ResourceCapError("shear-cap", "no separating coordinate found for the zero set");
}

std::string coord_string(const FieldElem& c) {
    const std::string s = c.to_string();
    return c.needs_parens() ? "(" + s + ")" : s;
}

}  // namespace

std::string ProjPoint::label() const {
    const std::string a = coord_string(coords[0]), b = coord_string(coords[1]);
    std::string s;
    switch (chart) {
        case 0: s = "[" + a + " : " + b + " : 1]"; break;
        case 1: s = "[1 : " + a + " : " + b + "]"; break;
        default: s = "[" + a + " : 1 : " + b + "]"; break;
    }
    if (!field->is_rational()) s += " over " + field->describe();
    return s;
}

ProjFoliation ProjFoliation::from_affine(const MultiPoly& a0, const MultiPoly& b0) {
    require_rational(a0);
    require_rational(b0);
    if (a0.is_zero() && b0.is_zero()) throw PreconditionError("zero-field", "the zero vector field defines no foliation");
    const MultiPoly a = a0.renamed(kChartVars[0]), b = b0.renamed(kChartVars[0]);
    if (!gcd(a, b).is_constant())
        throw PreconditionError("non-saturated", "components share the factor " + gcd(a, b).to_string());
    const int k = std::max(a.total_degree(), b.total_degree());
    const MultiPoly ak = a.homogeneous_part(k), bk = b.homogeneous_part(k);
    const MultiPoly X = var(kChartVars[0], 0), Y = var(kChartVars[0], 1);
    ProjFoliation F;
    const MultiPoly w = X * bk - Y * ak;
    if (!w.is_zero() || k == 0) {
        F.degree = k;
        F.line_at_infinity_invariant = true;
        F.P = homog(a, k);
        F.Q = homog(b, k);
        F.R = MultiPoly(kHomogeneousVars);
    } else {
        // a_k = x g, b_k = y g: the line at infinity is not invariant.
        const MultiPoly g = ak.exact_div(X);
        F.degree = k - 1;
        F.line_at_infinity_invariant = false;
        F.P = homog(a - ak, k - 1);
        F.Q = homog(b - bk, k - 1);
        F.R = -homog(g, k - 1);
    }
    auto at = [](const MultiPoly& p, int chart) { return chart_poly(p, chart); };
    MultiPoly bb;
    MultiPoly aa = saturate(a, b, bb);
    F.charts[0] = VectorFieldGerm(aa, bb);
    {
        const MultiPoly u = var(kChartVars[1], 0), v = var(kChartVars[1], 1);
        aa = saturate(at(F.Q, 1) - u * at(F.P, 1), at(F.R, 1) - v * at(F.P, 1), bb);
        F.charts[1] = VectorFieldGerm(aa, bb);
    }
    {
        const MultiPoly s = var(kChartVars[2], 0), t = var(kChartVars[2], 1);
        aa = saturate(at(F.P, 2) - s * at(F.Q, 2), at(F.R, 2) - t * at(F.Q, 2), bb);
        F.charts[2] = VectorFieldGerm(aa, bb);
    }
    return F;
}

MultiPoly chart_poly(const MultiPoly& H, int chart) {
    const auto& cv = kChartVars[static_cast<size_t>(chart)];
    const MultiPoly one = MultiPoly::constant(cv, FieldElem(1)), p = var(cv, 0), q = var(cv, 1);
    std::map<std::string, MultiPoly> sub;
    switch (chart) {
        case 0: sub = {{"x", p}, {"y", q}, {"z", one}}; break;
        case 1: sub = {{"x", one}, {"y", p}, {"z", q}}; break;
        case 2: sub = {{"x", p}, {"y", one}, {"z", q}}; break;
        default: throw std::logic_error("bad chart");
    }
    return substitute(H, sub);
}

std::vector<ProjPoint> chart_zeros(const std::vector<MultiPoly>& gens, int chart) {
    if (chart == 0) return affine_zeros(gens);
    const auto& cv = kChartVars[static_cast<size_t>(chart)];
    if (chart == 1) {
        // Points on z = 0 with x != 0: v = 0.
        QPoly g;
        bool any = false;
        for (const auto& p : gens) {
            require_rational(p);
            const MultiPoly r = substitute(p, {{cv[0], var(cv, 0)}, {cv[1], MultiPoly(cv)}});
            const QPoly q = to_qpoly(r, 0);
            g = any ? gcd(g, q) : q;
            any = any || !q.is_zero();
        }
        if (!any) throw PreconditionError("non-isolated", "zero set contains the line at infinity");
        if (g.degree() <= 0) return {};
        return univariate_zeros(g, 1, true);
    }
    const Point o{FieldElem(0), FieldElem(0)};
    for (const auto& p : gens)
        if (!p.evaluate(o).is_zero()) return {};
    return {ProjPoint{2, FieldDescriptor::rationals(), o, 1}};
}

std::vector<ProjPoint> projective_zeros(const std::vector<MultiPoly>& hs) {
    std::vector<ProjPoint> out;
    for (int c = 0; c < 3; ++c) {
        std::vector<MultiPoly> g;
        for (const auto& h : hs) g.push_back(chart_poly(h, c));
        for (auto& p : chart_zeros(g, c)) out.push_back(std::move(p));
    }
    return out;
}

std::vector<ProjPoint> singular_points(const ProjFoliation& F) {
    std::vector<ProjPoint> out;
    for (int c = 0; c < 3; ++c) {
        const auto& v = F.charts[static_cast<size_t>(c)];
        for (auto& p : chart_zeros({v.a, v.b}, c)) out.push_back(std::move(p));
    }
    return out;
}

std::vector<ProjPoint> curve_singular_points(const MultiPoly& H) {
    require_rational(H);
    if (H.total_degree() < 1) throw PreconditionError("bad-degree", "curve must have positive degree");
    if (!is_squarefree(H)) throw PreconditionError("non-reduced", H.to_string() + " is not reduced");
    // Euler's identity makes the three partials enough.
    return projective_zeros({H.derivative(0), H.derivative(1), H.derivative(2)});
}

VectorFieldGerm localize(const ProjFoliation& F, const ProjPoint& p) {
    const auto& v = F.charts[static_cast<size_t>(p.chart)];
    return VectorFieldGerm(v.a.promoted(p.field), v.b.promoted(p.field), p.coords).at_origin();
}

MultiPoly localize(const MultiPoly& H, const ProjPoint& p) {
    return translate_to_origin(chart_poly(H, p.chart).promoted(p.field), p.coords);
}

bool is_log_along(const ProjFoliation& F, const MultiPoly& H) {
    require_rational(H);
    if (H.is_zero()) throw PreconditionError("zero-input", "divisor is zero");
    for (int c = 0; c < 3; ++c) {
        const MultiPoly h = chart_poly(H, c);
        if (h.is_constant()) continue;
        if (!is_logarithmic(F.charts[static_cast<size_t>(c)], h)) return false;
    }
    return true;
}

bool charts_compatible(const ProjFoliation& F, const Point& at) {
    // Chart 0 point (x, y) with x, y != 0 maps to chart 1 (y/x, 1/x) and chart 2 (x/y, 1/y).
    const FieldElem x = at[0], y = at[1];
    const FieldElem a = F.charts[0].a.evaluate(at), b = F.charts[0].b.evaluate(at);
    // Push forward of (a, b) under (x, y) -> (y/x, 1/x) and (x/y, 1/y).
    const FieldElem ix = x.inverse(), iy = y.inverse();
    const FieldElem p1 = (b * x - y * a) * ix * ix, q1 = -a * ix * ix;
    const FieldElem p2 = (a * y - x * b) * iy * iy, q2 = -b * iy * iy;
    const Point c1{y * ix, ix}, c2{x * iy, iy};
    const FieldElem a1 = F.charts[1].a.evaluate(c1), b1 = F.charts[1].b.evaluate(c1);
    const FieldElem a2 = F.charts[2].a.evaluate(c2), b2 = F.charts[2].b.evaluate(c2);
    return (p1 * b1 - q1 * a1).is_zero() && (p2 * b2 - q2 * a2).is_zero();
}

}  // namespace folindex
