#include "folindex/confun.hpp"

#include "folindex/errors.hpp"
#include "folindex/localmult.hpp"

namespace folindex {

namespace {

const Point kOrigin{FieldElem(0), FieldElem(0)};

std::string term(long c, const std::string& label, bool first) {
    std::string s;
    if (c < 0)
        s = first ? "-" : " - ";
    else if (!first)
        s = " + ";
    const long a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a) + "*";
    return s + label;
}

}  // namespace

CurveData curve_data(const MultiPoly& f) {
    if (f.nvars() != 2) throw PreconditionError("variable-mismatch", "curve germs live in two variables");
    if (!f.constant_term().is_zero()) throw PreconditionError("not-on-curve", "the origin does not lie on " + f.to_string());
    if (!is_squarefree(f)) throw PreconditionError("non-reduced", f.to_string() + " is not reduced");
    return {f, milnor_number(f, kOrigin), curve_multiplicity(f, kOrigin)};
}

ConstructibleFn ConstructibleFn::ambient() {
    ConstructibleFn g;
    g.ambient_ = 1;
    return g;
}

ConstructibleFn ConstructibleFn::point() {
    ConstructibleFn g;
    g.point_ = 1;
    return g;
}

ConstructibleFn ConstructibleFn::euler_obstruction(const MultiPoly& f) {
    ConstructibleFn g;
    CurveData d = curve_data(f);
    const std::string key = f.to_string();
    g.curves_[key] = 1;
    g.registry_.emplace(key, std::move(d));
    return g;
}

void ConstructibleFn::normalize() {
    for (auto it = curves_.begin(); it != curves_.end();) {
        if (it->second == 0) {
            registry_.erase(it->first);
            it = curves_.erase(it);
        } else {
            ++it;
        }
    }
}

ConstructibleFn operator+(const ConstructibleFn& a, const ConstructibleFn& b) {
    ConstructibleFn r = a;
    r.ambient_ += b.ambient_;
    r.point_ += b.point_;
    for (const auto& [key, c] : b.curves_) {
        if (!r.registry_.count(key)) {
            const CurveData& d = b.registry_.at(key);
            for (const auto& [k2, d2] : r.registry_)
                if (!gcd(d.f, d2.f).is_constant())
                    throw PreconditionError("overlapping-curves", key + " and " + k2 + " share a component");
            r.registry_.emplace(key, d);
        }
        r.curves_[key] += c;
    }
    r.normalize();
    return r;
}

ConstructibleFn operator*(long k, const ConstructibleFn& a) {
    ConstructibleFn r = a;
    r.ambient_ *= k;
    r.point_ *= k;
    for (auto& [key, c] : r.curves_) c *= k;
    r.normalize();
    return r;
}

ConstructibleFn operator-(const ConstructibleFn& a, const ConstructibleFn& b) { return a + (-1) * b; }

bool operator==(const ConstructibleFn& a, const ConstructibleFn& b) {
    return a.ambient_ == b.ambient_ && a.point_ == b.point_ && a.curves_ == b.curves_;
}

long ConstructibleFn::value_at_origin() const {
    long v = ambient_ + point_;
    for (const auto& [key, c] : curves_) v += c * registry_.at(key).multiplicity;
    return v;
}

long ConstructibleFn::value_on_curve(const std::string& key) const {
    if (!registry_.count(key)) throw PreconditionError("unknown-curve", "no curve " + key + " in the support");
    return ambient_ + curves_.at(key);
}

ConstructibleFn::IndicatorForm ConstructibleFn::indicator_form() const {
    IndicatorForm f;
    f.ambient = ambient_;
    f.point = point_;
    for (const auto& [key, c] : curves_) {
        f.curves[key] = c;
        f.point -= c * (1 - registry_.at(key).multiplicity);
    }
    return f;
}

ConstructibleFn ConstructibleFn::from_indicator_form(const IndicatorForm& form,
                                                     const std::map<std::string, CurveData>& registry) {
    ConstructibleFn g;
    g.ambient_ = form.ambient;
    g.point_ = form.point;
    for (const auto& [key, c] : form.curves) {
        const CurveData& d = registry.at(key);
        g.curves_[key] = c;
        g.registry_.emplace(key, d);
        g.point_ += c * (1 - d.multiplicity);
    }
    g.normalize();
    return g;
}

std::string ConstructibleFn::to_string() const {
    std::string s;
    if (ambient_ != 0) s += term(ambient_, "1[W]", s.empty());
    for (const auto& [key, c] : curves_) s += term(c, "Eu[" + key + "]", s.empty());
    if (point_ != 0) s += term(point_, "1[0]", s.empty());
    return s.empty() ? "0" : s;
}

// 1_C = Eu_C - (m - 1) 1_0 for a curve germ; Eu_C(0) = m.
ConstructibleFn indicator_curve(const MultiPoly& f) {
    ConstructibleFn g = ConstructibleFn::euler_obstruction(f);
    const long m = g.registry().begin()->second.multiplicity;
    return g + (1 - m) * ConstructibleFn::point();
}

ConstructibleFn vanishing_cycles(const MultiPoly& f) {
    const long mu = curve_data(f).milnor;
    const long sign = (kAmbientDim - 1) % 2 == 0 ? 1 : -1;
    return (sign * mu) * ConstructibleFn::point();
}

ConstructibleFn nearby_cycles(const MultiPoly& f) { return indicator_curve(f) + vanishing_cycles(f); }

ConstructibleFn complement_of_divisor(const std::vector<std::pair<MultiPoly, long>>& divisor) {
    if (divisor.empty()) throw PreconditionError("empty-divisor", "divisor of degree 0 is outside the definition");
    ConstructibleFn g = ConstructibleFn::ambient();
    long deg = 0;
    for (const auto& [c, a] : divisor) {
        if (a <= 0) throw PreconditionError("bad-coefficient", "divisor coefficients must be positive");
        if (local_branch_count(c, kOrigin) != 1)
            throw PreconditionError("reducible-curve", c.to_string() + " is not locally irreducible");
        g = g - a * indicator_curve(c);
        deg += a;
    }
    return g + (deg - 1) * ConstructibleFn::point();
}

std::string LagrangianCycle::to_string() const {
    std::string s;
    for (const auto& [label, c] : terms) s += term(c, "[" + label + "]", s.empty());
    return s.empty() ? "0" : s;
}

// Coefficient of T*_Z M is (-1)^dim Z times the Eu-basis coefficient.
LagrangianCycle cc(const ConstructibleFn& g) {
    LagrangianCycle l;
    const long sw = kAmbientDim % 2 == 0 ? 1 : -1;
    if (g.ambient_coeff() != 0) l.terms.emplace_back("W", sw * g.ambient_coeff());
    for (const auto& [key, c] : g.curve_terms()) l.terms.emplace_back("T*C[" + key + "]", -c);
    if (g.point_coeff() != 0) l.terms.emplace_back("T*0", g.point_coeff());
    return l;
}

long index_pairing(const ConstructibleFn& g, const VectorFieldGerm& nu) {
    for (const auto& c : nu.point())
        if (!c.is_zero()) throw PreconditionError("base-mismatch", "constructible functions live at the origin");
    long v = g.point_coeff();
    if (g.ambient_coeff() != 0) v += g.ambient_coeff() * ph_index(nu).value;
    for (const auto& [key, c] : g.curve_terms()) v += c * euler_obstruction_field(nu, g.registry().at(key).f).value;
    return v;
}

}  // namespace folindex
