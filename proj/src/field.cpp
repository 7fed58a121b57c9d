#include "folindex/field.hpp"

#include <sstream>

#include "folindex/errors.hpp"
#include "folindex/factor.hpp"

namespace folindex {

std::string to_string(const mpq_class& q) { return q.get_str(); }

std::string to_string(const QPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        mpq_class c = p.coeff(k);
        if (sgn(c) == 0) continue;
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        mpq_class a = abs(c);
        if (k == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

FieldPtr FieldDescriptor::rationals() {
    static const FieldPtr q = std::make_shared<const FieldDescriptor>(Token{}, "", QPoly{});
    return q;
}

FieldPtr FieldDescriptor::extension(std::string generator, QPoly minimal_polynomial) {
    if (minimal_polynomial.degree() < 2)
        throw PreconditionError("bad-minpoly", "minimal polynomial must have degree >= 2");
    if (minimal_polynomial.lc() != 1)
        throw PreconditionError("bad-minpoly", "minimal polynomial must be monic");
    if (gcd(minimal_polynomial, minimal_polynomial.derivative()).degree() > 0)
        throw PreconditionError("bad-minpoly", "minimal polynomial is not square-free: " +
                                                   to_string(minimal_polynomial, generator));
    if (!rational_roots(minimal_polynomial).empty())
        throw PreconditionError("bad-minpoly", "minimal polynomial has a rational root: " +
                                                   to_string(minimal_polynomial, generator));
    return std::make_shared<const FieldDescriptor>(Token{}, std::move(generator), std::move(minimal_polynomial));
}

bool FieldDescriptor::same_as(const FieldDescriptor& other) const {
    if (this == &other) return true;
    if (is_rational() || other.is_rational()) return is_rational() == other.is_rational();
    return generator_ == other.generator_ && minpoly_ == other.minpoly_;
}

std::string FieldDescriptor::describe() const {
    if (is_rational()) return "QQ";
    return "QQ(" + generator_ + ") with " + to_string(minpoly_, generator_) + " = 0";
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b || b->is_rational()) return a;
    if (a->is_rational()) return b;
    if (a->same_as(*b)) return a;
    throw DescriptorMismatch("cannot combine elements of " + a->describe() + " and " + b->describe());
}

FieldElem::FieldElem(long v) : field_(FieldDescriptor::rationals()) {
    if (v != 0) c_.emplace_back(v);
}

FieldElem::FieldElem(const mpq_class& v) : field_(FieldDescriptor::rationals()) {
    if (sgn(v) != 0) c_.push_back(v);
}

FieldElem::FieldElem(FieldPtr field, std::vector<mpq_class> coefficients)
    : field_(std::move(field)), c_(std::move(coefficients)) {
    for (auto& c : c_) c.canonicalize();
    reduce();
}

FieldElem FieldElem::generator(const FieldPtr& field) {
    if (field->is_rational()) throw PreconditionError("bad-field", "QQ has no generator");
    return FieldElem(field, {mpq_class(0), mpq_class(1)});
}

void FieldElem::reduce() {
    const QPoly& m = field_->minimal_polynomial();
    if (!field_->is_rational() && static_cast<int>(c_.size()) > m.degree()) {
        const int dm = m.degree();
        for (int k = static_cast<int>(c_.size()) - 1; k >= dm; --k) {
            if (sgn(c_[static_cast<size_t>(k)]) == 0) continue;
            mpq_class f = c_[static_cast<size_t>(k)];
            for (int j = 0; j <= dm; ++j) c_[static_cast<size_t>(k - dm + j)] -= f * m.coeffs()[static_cast<size_t>(j)];
        }
        c_.resize(static_cast<size_t>(dm));
    }
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

bool FieldElem::is_one() const { return c_.size() == 1 && c_[0] == 1; }

mpq_class FieldElem::rational_value() const {
    if (!is_rational()) throw PreconditionError("not-rational", "element " + to_string() + " is not rational");
    return c_.empty() ? mpq_class(0) : c_[0];
}

FieldElem FieldElem::promoted(const FieldPtr& target) const {
    FieldPtr f = common_field(target, field_);
    if (f == field_) return *this;
    FieldElem r;
    r.field_ = f;
    r.c_ = c_;
    return r;
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    FieldElem r;
    r.field_ = common_field(a.field_, b.field_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    while (!r.c_.empty() && sgn(r.c_.back()) == 0) r.c_.pop_back();
    return r;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    FieldElem r;
    r.field_ = common_field(a.field_, b.field_);
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.reduce();
    return r;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in field");
    if (field_->is_rational()) return FieldElem(mpq_class(1) / c_[0]);
    auto [g, s, t] = ext_gcd(QPoly(c_), field_->minimal_polynomial());
    if (g.degree() != 0)
        throw PreconditionError("reducible-minpoly",
                                "minimal polynomial " + folindex::to_string(field_->minimal_polynomial(), field_->generator()) +
                                    " is reducible: " + to_string() + " is a zero divisor");
    return FieldElem(field_, s.coeffs());
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

FieldElem FieldElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElem base = *this, acc(1);
    acc = acc.promoted(field_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    if (a.c_.size() <= 1) return true;
    return a.field_->same_as(*b.field_);
}

bool FieldElem::needs_parens() const {
    int nonzero = 0;
    for (const auto& c : c_)
        if (sgn(c) != 0) ++nonzero;
    return nonzero > 1;
}

std::string FieldElem::to_string() const {
    if (c_.empty()) return "0";
    if (c_.size() == 1) return c_[0].get_str();
    return folindex::to_string(QPoly(c_), field_->generator());
}

std::ostream& operator<<(std::ostream& os, const FieldElem& e) { return os << e.to_string(); }

}  // namespace folindex
