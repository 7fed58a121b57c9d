#include "folindex/indices.hpp"

#include <stdexcept>

#include "folindex/errors.hpp"
#include "folindex/localmult.hpp"
#include "folindex/puiseux.hpp"

namespace folindex {

namespace {

constexpr int kSign = (kAmbientDim - 1) % 2 == 0 ? 1 : -1;  // (-1)^(n-1)

Point origin_of(const MultiPoly& p) { return Point(static_cast<size_t>(p.nvars()), FieldElem(0)); }

bool is_origin(const Point& p) {
    for (const auto& c : p)
        if (!c.is_zero()) return false;
    return true;
}

Point negated(const Point& p) {
    Point q;
    for (const auto& c : p) q.push_back(-c);
    return q;
}

void check_plane(const MultiPoly& p, const char* what) {
    if (p.nvars() != 2 && !p.vars().empty())
        throw PreconditionError("variable-mismatch", std::string(what) + " must be a polynomial in two variables");
}

// f translated so that the germ's base point is the origin.
MultiPoly local(const MultiPoly& f, const Point& base) {
    if (base.empty() || is_origin(base)) return f;
    return translate_to_origin(f, base);
}

void require_same_base(const VectorFieldGerm& u, const VectorFieldGerm& v) {
    const Point& p = u.point();
    const Point& q = v.point();
    if (p.size() != q.size()) throw PreconditionError("base-mismatch", "germs are based at different points");
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != q[i]) throw PreconditionError("base-mismatch", "germs are based at different points");
}

std::string field_str(const VectorFieldGerm& nu) { return nu.to_string(); }

long finite_or_throw(const LocalMultiplicity& m, const std::string& what) {
    if (m.infinite) throw PreconditionError("non-isolated", what + " has a non-isolated zero");
    return m.value;
}

// Single local branch with no conjugates; the curves of mu_along_curve and chi_number.
void require_locally_irreducible(const MultiPoly& c) {
    const int k = local_branch_count(c, origin_of(c));
    if (k != 1)
        throw PreconditionError("reducible-curve", c.to_string() + " has " + std::to_string(k) + " local branches at the point");
}

struct LocalData {
    VectorFieldGerm nu;  // at the origin
    MultiPoly f;         // translated
};

LocalData localize(const VectorFieldGerm& nu, const MultiPoly& f) {
    check_plane(f, "curve");
    return {nu.at_origin(), local(f, nu.base)};
}

}  // namespace

VectorFieldGerm::VectorFieldGerm(MultiPoly a_, MultiPoly b_, Point base_)
    : a(std::move(a_)), b(std::move(b_)), base(std::move(base_)) {
    if (a.vars().empty() && !b.vars().empty()) a = a + MultiPoly(b.vars(), b.field());
    if (b.vars().empty() && !a.vars().empty()) b = b + MultiPoly(a.vars(), a.field());
    check_plane(a, "vector field component");
    if (a.vars() != b.vars()) throw PreconditionError("variable-mismatch", "vector field components use different variables");
    if (!a.field()->same_as(*b.field())) {
        const FieldPtr K = common_field(a.field(), b.field());
        a = a.promoted(K);
        b = b.promoted(K);
    }
    if (!base.empty() && static_cast<int>(base.size()) != 2)
        throw PreconditionError("bad-point", "base point must have two coordinates");
}

const Point& VectorFieldGerm::point() const {
    static const Point zero{FieldElem(0), FieldElem(0)};
    return base.empty() ? zero : base;
}

VectorFieldGerm VectorFieldGerm::at_origin() const {
    if (base.empty() || is_origin(base)) return {a, b};
    return {translate_to_origin(a, base), translate_to_origin(b, base)};
}

MultiPoly VectorFieldGerm::apply(const MultiPoly& f) const {
    return a * f.derivative(0) + b * f.derivative(1);
}

std::string VectorFieldGerm::to_string() const { return "(" + a.to_string() + ", " + b.to_string() + ")"; }

MultiPoly det(const VectorFieldGerm& u, const VectorFieldGerm& v) { return u.a * v.b - u.b * v.a; }

std::string kind_name(IndexKind k) {
    switch (k) {
        case IndexKind::PH: return "PH";
        case IndexKind::EU_OBSTRUCTION: return "EU_OBSTRUCTION";
        case IndexKind::GSV: return "GSV";
        case IndexKind::SCHWARTZ: return "SCHWARTZ";
        case IndexKind::LOG: return "LOG";
        case IndexKind::MU_ALONG_CURVE: return "MU_ALONG_CURVE";
        case IndexKind::POLAR: return "POLAR";
        case IndexKind::CHI_NUMBER: return "CHI_NUMBER";
    }
    throw std::logic_error("unknown index kind");
}

IndexKind kind_from_name(const std::string& s) {
    for (IndexKind k : {IndexKind::PH, IndexKind::EU_OBSTRUCTION, IndexKind::GSV, IndexKind::SCHWARTZ, IndexKind::LOG,
                        IndexKind::MU_ALONG_CURVE, IndexKind::POLAR, IndexKind::CHI_NUMBER})
        if (kind_name(k) == s) return k;
    throw ParseError("unknown index kind '" + s + "'");
}

long IndexReport::ingredient(const std::string& name) const {
    for (const auto& [k, v] : ingredients)
        if (k == name) return v;
    throw std::out_of_range("report has no ingredient " + name);
}

bool is_logarithmic(const VectorFieldGerm& nu, const MultiPoly& f) {
    if (f.is_zero()) throw PreconditionError("zero-input", "logarithmic test against the zero polynomial");
    MultiPoly q;
    return nu.apply(f).divide_exact(f, q);
}

IndexReport ph_index(const VectorFieldGerm& nu) {
    const VectorFieldGerm g = nu.at_origin();
    IndexReport r{IndexKind::PH, 0, {}, {}};
    r.value = finite_or_throw(intersection_multiplicity_at_origin(g.a, g.b), "vector field " + field_str(nu));
    r.add("intersection_multiplicity", r.value);
    return r;
}

IndexReport euler_obstruction_field(const VectorFieldGerm& nu, const MultiPoly& f) {
    const LocalData loc = localize(nu, f);
    const VectorFieldGerm& g = loc.nu;
    const MultiPoly& F = loc.f;
    const bool log = is_logarithmic(g, F);
    IndexReport r{IndexKind::EU_OBSTRUCTION, 0, {}, {}};
    std::vector<std::pair<int, int>> per_branch;  // (order, conjugates)
    try {
        per_branch = with_adaptive_precision(initial_precision(F), [&](int N) {
            std::vector<std::pair<int, int>> out;
            for (const auto& b : branches(F, origin_of(F), N)) out.emplace_back(nash_lift_order(b, g.a, g.b), b.conjugacy_size);
            return out;
        });
    } catch (const PreconditionError& e) {
        if (e.code() == "non-tangent" && log)
            throw PreconditionError("tangency-disagreement", "f divides nu(f) but nu is not tangent to every branch of " +
                                                                  f.to_string());
        throw;
    }
    if (!log)
        throw PreconditionError("tangency-disagreement",
                                "nu is tangent to every branch at the point but f does not divide nu(f) for " + f.to_string());
    long total = 0;
    for (size_t i = 0; i < per_branch.size(); ++i) {
        const auto [ord, conj] = per_branch[i];
        const std::string k = "branch_" + std::to_string(i + 1);
        r.add(k + "_order", ord);
        r.add(k + "_conjugates", conj);
        total += static_cast<long>(ord) * conj;
    }
    r.value = total;
    return r;
}

IndexReport gsv_index(const VectorFieldGerm& nu, const MultiPoly& f) {
    const IndexReport eu = euler_obstruction_field(nu, f);
    const MultiPoly F = local(f, nu.base);
    const long mu = milnor_number(F, origin_of(F));
    const long m = curve_multiplicity(F, origin_of(F));
    IndexReport r{IndexKind::GSV, eu.value + 1 + kSign * mu - m, {}, {}};
    r.add("euler_obstruction", eu.value);
    r.add("milnor", mu);
    r.add("multiplicity", m);
    r.add("n", kAmbientDim);
    return r;
}

IndexReport schwartz_index(const VectorFieldGerm& nu, const MultiPoly& f) {
    IndexReport r = gsv_index(nu, f);
    const long gsv = r.value;
    r.kind = IndexKind::SCHWARTZ;
    r.value = gsv - kSign * r.ingredient("milnor");
    r.add("gsv", gsv);
    return r;
}

MultiPoly saito_check(const VectorFieldGerm& chi1, const VectorFieldGerm& chi2, const MultiPoly& f) {
    require_same_base(chi1, chi2);
    if (!is_logarithmic(chi1, f) || !is_logarithmic(chi2, f))
        throw PreconditionError("not-logarithmic", "basis fields must be logarithmic along " + f.to_string());
    const MultiPoly d = det(chi1, chi2);
    MultiPoly u;
    if (!d.divide_exact(f, u) || u.evaluate(chi1.point()).is_zero())
        throw PreconditionError("saito-failure", "det(chi1, chi2) = " + d.to_string() + " is not a unit multiple of " +
                                                     f.to_string());
    return u;
}

IndexReport log_index(const VectorFieldGerm& nu, const LogBasis& basis) {
    require_same_base(nu, basis.chi1);
    const MultiPoly& f = basis.divisor;
    const MultiPoly u = saito_check(basis.chi1, basis.chi2, f);
    if (!is_logarithmic(nu, f)) throw PreconditionError("not-logarithmic", "vector field is not logarithmic along " + f.to_string());
    // Sing of the field on the ambient germ must be isolated.
    const long ph = ph_index(nu).value;

    const VectorFieldGerm g = nu.at_origin(), c1 = basis.chi1.at_origin(), c2 = basis.chi2.at_origin();
    const MultiPoly den = local(u * f, nu.base);
    // Cramer: alpha_1 = det(nu, chi2)/det, alpha_2 = det(chi1, nu)/det.
    std::vector<MultiPoly> num{det(g, c2), det(c1, g)};
    for (auto& n : num) {
        const MultiPoly h = gcd(n, den);
        const MultiPoly d = den.exact_div(h);
        if (d.constant_term().is_zero())
            throw PreconditionError("alpha-not-regular", "coefficient of nu in the basis is not regular at the point");
        n = n.exact_div(h);
    }
    IndexReport r{IndexKind::LOG, 0, {}, {"Sing(nu) = {point} on the ambient germ"}};
    if (!num[0].constant_term().is_zero() || !num[1].constant_term().is_zero()) {
        r.value = 0;
    } else {
        r.value = finite_or_throw(intersection_multiplicity_at_origin(num[0], num[1]), "coefficient system");
    }
    r.add("alpha_colength", r.value);
    r.add("ph", ph);
    return r;
}

IndexReport mu_along_curve(const VectorFieldGerm& nu, const MultiPoly& c) {
    require_locally_irreducible(local(c, nu.base));
    IndexReport r = schwartz_index(nu, c);
    r.kind = IndexKind::MU_ALONG_CURVE;
    r.add("schwartz", r.value);
    return r;
}

IndexReport polar_intersection(const VectorFieldGerm& nu, const MultiPoly& c) {
    IndexReport r = euler_obstruction_field(nu, c);
    r.kind = IndexKind::POLAR;
    r.add("euler_obstruction", r.value);
    return r;
}

IndexReport chi_number(const VectorFieldGerm& nu, const std::vector<std::pair<MultiPoly, long>>& divisor) {
    if (divisor.empty()) throw PreconditionError("empty-divisor", "chi-number needs a divisor of positive degree");
    IndexReport r{IndexKind::CHI_NUMBER, 0, {}, {"divisor balancedness is asserted by the caller"}};
    const long ph = ph_index(nu).value;
    long deg = 0, acc = ph;
    r.add("ph", ph);
    for (size_t i = 0; i < divisor.size(); ++i) {
        const auto& [c, a] = divisor[i];
        if (a <= 0) throw PreconditionError("bad-coefficient", "divisor coefficients must be positive");
        if (!is_logarithmic(nu, c)) throw PreconditionError("not-separatrix", c.to_string() + " is not invariant");
        require_locally_irreducible(local(c, nu.base));
        const long sch = schwartz_index(nu, c).value;
        const std::string k = std::to_string(i + 1);
        r.add("schwartz_" + k, sch);
        r.add("coefficient_" + k, a);
        acc -= a * sch;
        deg += a;
    }
    r.add("deg_divisor", deg);
    r.value = acc + deg - 1;
    return r;
}

std::optional<std::pair<mpq_class, mpq_class>> weighted_homogeneous_weights(const MultiPoly& f) {
    check_plane(f, "curve");
    if (f.is_zero() || !f.constant_term().is_zero()) return std::nullopt;
    std::vector<Exponent> es;
    for (const auto& [e, c] : f.terms()) es.push_back(e);
    std::pair<mpq_class, mpq_class> w;
    bool found = false;
    for (size_t i = 0; i < es.size() && !found; ++i)
        for (size_t j = i + 1; j < es.size() && !found; ++j) {
            const long d = static_cast<long>(es[i][0]) * es[j][1] - static_cast<long>(es[i][1]) * es[j][0];
            if (d == 0) continue;
            w = {mpq_class(es[j][1] - es[i][1], d), mpq_class(es[i][0] - es[j][0], d)};
            w.first.canonicalize();
            w.second.canonicalize();
            found = true;
        }
    if (!found) {
        if (es.size() != 1) return std::nullopt;
        const int s = total_degree(es[0]);
        w = {mpq_class(1, s), mpq_class(1, s)};
        w.first.canonicalize();
        w.second.canonicalize();
    }
    if (sgn(w.first) <= 0 || sgn(w.second) <= 0) return std::nullopt;
    for (const auto& e : es)
        if (w.first * e[0] + w.second * e[1] != 1) return std::nullopt;
    return w;
}

std::optional<LogBasis> automatic_log_basis(const MultiPoly& f, const Point& base) {
    check_plane(f, "curve");
    const Point p = base.empty() ? origin_of(f) : base;
    const MultiPoly F = local(f, p);
    if (F.is_zero() || !F.constant_term().is_zero()) return std::nullopt;
    const auto& vars = F.vars();
    const MultiPoly X = MultiPoly::variable(vars, 0), Y = MultiPoly::variable(vars, 1), zero(vars, F.field());
    const MultiPoly Fx = F.derivative(0), Fy = F.derivative(1);
    const VectorFieldGerm ham(Fy, -Fx);
    VectorFieldGerm other;
    if (!Fx.constant_term().is_zero()) {
        other = VectorFieldGerm(F, zero);
    } else if (!Fy.constant_term().is_zero()) {
        other = VectorFieldGerm(zero, F);
    } else if (auto w = weighted_homogeneous_weights(F)) {
        mpz_class d = lcm(w->first.get_den(), w->second.get_den());
        const mpq_class w1 = w->first * d, w2 = w->second * d;
        other = VectorFieldGerm(FieldElem(w1) * X, FieldElem(w2) * Y);
    } else {
        return std::nullopt;
    }
    // Back to the caller's coordinates.
    const Point back = negated(p);
    auto lift = [&](const VectorFieldGerm& v) {
        return is_origin(p) ? VectorFieldGerm(v.a, v.b, p)
                            : VectorFieldGerm(translate_to_origin(v.a, back), translate_to_origin(v.b, back), p);
    };
    return LogBasis{lift(other), lift(ham), f};
}

int local_branch_count(const MultiPoly& f, const Point& p) {
    return with_adaptive_precision(initial_precision(f), [&](int N) {
        int k = 0;
        for (const auto& b : branches(f, p, N)) k += b.conjugacy_size;
        return k;
    });
}

}  // namespace folindex
