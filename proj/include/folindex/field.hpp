#pragma once

#include <gmpxx.h>

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "folindex/upoly.hpp"

namespace folindex {

class FieldDescriptor;
using FieldPtr = std::shared_ptr<const FieldDescriptor>;

/// Either the rationals or a simple extension Q(theta) = Q[T]/(m(T)).
/// Irreducibility of m is only checked by cheap necessary tests
/// (square-free, no rational root); the caller asserts the rest.
class FieldDescriptor {
   public:
    static FieldPtr rationals();
    static FieldPtr extension(std::string generator, QPoly minimal_polynomial);

    bool is_rational() const noexcept { return minpoly_.degree() < 1; }
    int degree() const noexcept { return is_rational() ? 1 : minpoly_.degree(); }
    const std::string& generator() const noexcept { return generator_; }
    const QPoly& minimal_polynomial() const noexcept { return minpoly_; }

    bool same_as(const FieldDescriptor& other) const;
    std::string describe() const;

    // Tag used by the extension factory; not part of the public surface.
    struct Token {};
    FieldDescriptor(Token, std::string generator, QPoly minpoly)
        : generator_(std::move(generator)), minpoly_(std::move(minpoly)) {}

   private:
    std::string generator_;
    QPoly minpoly_;
};

/// Returns the larger of two compatible fields. Q embeds into every
/// extension; two distinct extensions never combine.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

/// Element of a FieldDescriptor, stored as reduced coefficients in the
/// generator (length < degree of the minimal polynomial, no trailing zeros).
class FieldElem {
   public:
    FieldElem() : field_(FieldDescriptor::rationals()) {}
    FieldElem(long v);  // NOLINT(google-explicit-constructor)
    FieldElem(const mpq_class& v);  // NOLINT(google-explicit-constructor)
    FieldElem(FieldPtr field, std::vector<mpq_class> coefficients);

    static FieldElem generator(const FieldPtr& field);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<mpq_class>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const;
    bool is_rational() const noexcept { return c_.size() <= 1; }
    // Valid only when is_rational().
    mpq_class rational_value() const;

    FieldElem promoted(const FieldPtr& target) const;
    FieldElem inverse() const;
    FieldElem pow(long e) const;

    FieldElem operator-() const;
    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
    FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
    FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }
    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    // Canonical text: rationals as p/q, extension elements as a polynomial
    // in the generator name.
    std::string to_string() const;
    // True if to_string() needs parentheses when used as a factor.
    bool needs_parens() const;

   private:
    void reduce();
    FieldPtr field_;
    std::vector<mpq_class> c_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& e);

std::string to_string(const mpq_class& q);
std::string to_string(const QPoly& p, const std::string& var);

}  // namespace folindex
