#include "folindex/multipoly.hpp"

#include <numeric>
#include <sstream>

#include "folindex/errors.hpp"

namespace folindex {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

MultiPoly::MultiPoly(std::vector<std::string> vars, FieldPtr field) : vars_(std::move(vars)), field_(std::move(field)) {}

MultiPoly MultiPoly::constant(const std::vector<std::string>& vars, const FieldElem& c) {
    MultiPoly p(vars, c.field());
    p.add_term(Exponent(vars.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const std::vector<std::string>& vars, int index) {
    Exponent e(vars.size(), 0);
    e.at(static_cast<size_t>(index)) = 1;
    return monomial(vars, e, FieldElem(1));
}

MultiPoly MultiPoly::variable(const std::vector<std::string>& vars, const std::string& name) {
    return variable(vars, MultiPoly(vars).var_index(name));
}

MultiPoly MultiPoly::monomial(const std::vector<std::string>& vars, Exponent e, const FieldElem& c) {
    MultiPoly p(vars, c.field());
    p.add_term(e, c);
    return p;
}

int MultiPoly::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    throw PreconditionError("unknown-variable", "variable " + name + " is not declared");
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && ::folindex::total_degree(terms_.begin()->first) == 0);
}

int MultiPoly::total_degree() const {
    return terms_.empty() ? -1 : ::folindex::total_degree(terms_.rbegin()->first);
}

int MultiPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(var)]);
    return d;
}

int MultiPoly::order() const { return terms_.empty() ? -1 : ::folindex::total_degree(terms_.begin()->first); }

FieldElem MultiPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElem().promoted(field_) : it->second;
}

FieldElem MultiPoly::constant_term() const { return coeff(Exponent(vars_.size(), 0)); }

const std::pair<const Exponent, FieldElem>& MultiPoly::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

MultiPoly MultiPoly::homogeneous_part(int k) const {
    MultiPoly r(vars_, field_);
    for (const auto& [e, c] : terms_)
        if (::folindex::total_degree(e) == k) r.terms_.emplace(e, c);
    return r;
}

MultiPoly MultiPoly::promoted(const FieldPtr& target) const {
    FieldPtr f = common_field(target, field_);
    if (f == field_) return *this;
    MultiPoly r(vars_, f);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.promoted(f));
    return r;
}

MultiPoly MultiPoly::renamed(std::vector<std::string> vars) const {
    if (vars.size() != vars_.size()) throw PreconditionError("variable-mismatch", "rename changes the variable count");
    MultiPoly r = *this;
    r.vars_ = std::move(vars);
    return r;
}

void MultiPoly::add_term(const Exponent& e, const FieldElem& c) {
    if (c.is_zero()) return;
    if (e.size() != vars_.size()) throw std::logic_error("exponent length does not match variable count");
    field_ = common_field(field_, c.field());
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void MultiPoly::check_compatible(const MultiPoly& b) const {
    if (vars_ != b.vars_)
        throw PreconditionError("variable-mismatch", "polynomials in different variable lists cannot be combined");
}

// A polynomial with no declared variables is a bare scalar and adapts to the
// variable list of the other operand.
static MultiPoly adapt(const MultiPoly& p, const std::vector<std::string>& vars) {
    if (!p.vars().empty() || vars.empty()) return p;
    return p.is_zero() ? MultiPoly(vars, p.field()) : MultiPoly::constant(vars, p.constant_term());
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly operator+(const MultiPoly& a0, const MultiPoly& b0) {
    MultiPoly a = adapt(a0, b0.vars()), b = adapt(b0, a0.vars());
    a.check_compatible(b);
    MultiPoly r = a.promoted(b.field_);
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a0, const MultiPoly& b0) {
    MultiPoly a = adapt(a0, b0.vars()), b = adapt(b0, a0.vars());
    a.check_compatible(b);
    MultiPoly r(a.vars_, common_field(a.field_, b.field_));
    Exponent e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly operator*(const FieldElem& s, const MultiPoly& p) {
    MultiPoly r(p.vars_, common_field(p.field_, s.field()));
    if (s.is_zero()) return r;
    for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (!a.terms_.empty() && a.vars_ != b.vars_) return false;
    auto ib = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
        if (e != ib->first || c != ib->second) return false;
        ++ib;
    }
    return true;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::domain_error("negative polynomial power");
    MultiPoly acc = constant(vars_, FieldElem(1).promoted(field_)), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(vars_, field_);
    for (const auto& [e, c] : terms_) {
        const int k = e[static_cast<size_t>(var)];
        if (k == 0) continue;
        Exponent d = e;
        --d[static_cast<size_t>(var)];
        r.add_term(d, FieldElem(static_cast<long>(k)) * c);
    }
    return r;
}

MultiPoly MultiPoly::shift(int var, int k) const {
    MultiPoly r(vars_, field_);
    for (const auto& [e, c] : terms_) {
        Exponent d = e;
        d[static_cast<size_t>(var)] += k;
        if (d[static_cast<size_t>(var)] < 0) throw std::domain_error("inexact division by a variable power");
        r.terms_.emplace(std::move(d), c);
    }
    return r;
}

int MultiPoly::valuation_in(int var) const {
    if (terms_.empty()) return -1;
    int v = terms_.begin()->first[static_cast<size_t>(var)];
    for (const auto& [e, c] : terms_) v = std::min(v, e[static_cast<size_t>(var)]);
    return v;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(int var) const {
    std::vector<MultiPoly> out(static_cast<size_t>(std::max(0, degree_in(var) + 1)), MultiPoly(vars_, field_));
    for (const auto& [e, c] : terms_) {
        Exponent d = e;
        const int k = d[static_cast<size_t>(var)];
        d[static_cast<size_t>(var)] = 0;
        out[static_cast<size_t>(k)].terms_.emplace(std::move(d), c);
    }
    return out;
}

MultiPoly MultiPoly::from_coefficients(const std::vector<std::string>& vars, int var,
                                       const std::vector<MultiPoly>& coeffs) {
    MultiPoly r(vars);
    for (size_t k = 0; k < coeffs.size(); ++k) r += coeffs[k].shift(var, static_cast<int>(k));
    return r;
}

bool MultiPoly::divide_exact(const MultiPoly& d0, MultiPoly& quotient) const {
    MultiPoly d = adapt(d0, vars_);
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    check_compatible(d);
    MultiPoly r = *this;
    MultiPoly q(vars_, common_field(field_, d.field_));
    const auto& [ld, lc] = d.leading_term();
    const FieldElem lc_inv = lc.inverse();
    Exponent m(vars_.size());
    while (!r.is_zero()) {
        const auto& [lr, cr] = r.leading_term();
        for (size_t i = 0; i < m.size(); ++i) {
            m[i] = lr[i] - ld[i];
            if (m[i] < 0) return false;
        }
        const FieldElem f = cr * lc_inv;
        q.add_term(m, f);
        r -= monomial(vars_, m, f) * d;
    }
    quotient = std::move(q);
    return true;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& d) const {
    MultiPoly q;
    if (!divide_exact(d, q)) throw std::domain_error("inexact polynomial division: " + to_string() + " by " + d.to_string());
    return q;
}

FieldElem MultiPoly::evaluate(const std::vector<FieldElem>& at) const {
    if (at.size() != vars_.size()) throw PreconditionError("bad-point", "point dimension does not match variables");
    FieldElem acc = FieldElem().promoted(field_);
    for (const auto& [e, c] : terms_) {
        FieldElem t = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t *= at[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

UPoly<FieldElem> MultiPoly::to_univariate(int var) const {
    std::vector<FieldElem> v(static_cast<size_t>(std::max(0, degree_in(var) + 1)));
    for (const auto& [e, c] : terms_) {
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != var && e[i] != 0)
                throw PreconditionError("not-univariate", to_string() + " is not univariate in " + vars_[static_cast<size_t>(var)]);
        v[static_cast<size_t>(e[static_cast<size_t>(var)])] = c;
    }
    return UPoly<FieldElem>(std::move(v));
}

MultiPoly MultiPoly::from_univariate(const std::vector<std::string>& vars, int var, const UPoly<FieldElem>& u) {
    MultiPoly r(vars);
    Exponent e(vars.size(), 0);
    for (int k = 0; k <= u.degree(); ++k) {
        e[static_cast<size_t>(var)] = k;
        r.add_term(e, u.coeff(k));
    }
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        // A coefficient with a single term carries its sign outside.
        bool negative = false;
        FieldElem a = c;
        if (!c.needs_parens()) {
            for (const auto& q : c.coefficients())
                if (sgn(q) != 0) negative = sgn(q) < 0;
            if (negative) a = -c;
        }
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        std::string cs = a.needs_parens() ? "(" + a.to_string() + ")" : a.to_string();
        if (mono.empty())
            os << cs;
        else if (a.is_one())
            os << mono;
        else
            os << cs << "*" << mono;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

}  // namespace folindex
