#pragma once

#include <map>
#include <string>
#include <vector>

#include "folindex/field.hpp"

namespace folindex {

using Exponent = std::vector<int>;

/// Graded lexicographic order, ascending. The first declared variable is the
/// most significant one in the lexicographic tie break.
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

int total_degree(const Exponent& e);

/// Sparse multivariate polynomial over a FieldDescriptor. Zero coefficients
/// are never stored. Polynomials over Q promote into any extension; two
/// different extensions never combine, and the variable lists must match.
class MultiPoly {
   public:
    using TermMap = std::map<Exponent, FieldElem, GrlexLess>;

    MultiPoly() : field_(FieldDescriptor::rationals()) {}
    explicit MultiPoly(std::vector<std::string> vars, FieldPtr field = FieldDescriptor::rationals());

    static MultiPoly constant(const std::vector<std::string>& vars, const FieldElem& c);
    static MultiPoly variable(const std::vector<std::string>& vars, int index);
    static MultiPoly variable(const std::vector<std::string>& vars, const std::string& name);
    static MultiPoly monomial(const std::vector<std::string>& vars, Exponent e, const FieldElem& c);

    const std::vector<std::string>& vars() const noexcept { return vars_; }
    int nvars() const noexcept { return static_cast<int>(vars_.size()); }
    int var_index(const std::string& name) const;
    const FieldPtr& field() const noexcept { return field_; }
    const TermMap& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    // -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(int var) const;
    // Lowest total degree of a term (order at the origin); -1 for zero.
    int order() const;
    FieldElem coeff(const Exponent& e) const;
    FieldElem constant_term() const;
    // Largest term in grlex order; requires a nonzero polynomial.
    const std::pair<const Exponent, FieldElem>& leading_term() const;
    // Sum of the terms of total degree k.
    MultiPoly homogeneous_part(int k) const;

    MultiPoly promoted(const FieldPtr& target) const;
    // Same terms, new variable names (same count).
    MultiPoly renamed(std::vector<std::string> vars) const;

    void add_term(const Exponent& e, const FieldElem& c);

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const FieldElem& c, const MultiPoly& p);
    MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
    MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
    MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(int e) const;
    MultiPoly derivative(int var) const;
    // Multiplies by var^k (k >= 0) or divides by it (k < 0, must be exact).
    MultiPoly shift(int var, int k) const;
    // Largest k with var^k dividing this; -1 for zero.
    int valuation_in(int var) const;

    // Coefficients c_k with this = sum_k c_k * var^k; each c_k is free of var.
    std::vector<MultiPoly> coefficients_in(int var) const;
    static MultiPoly from_coefficients(const std::vector<std::string>& vars, int var,
                                       const std::vector<MultiPoly>& coeffs);

    // Exact quotient if d divides this, otherwise false.
    bool divide_exact(const MultiPoly& d, MultiPoly& quotient) const;
    MultiPoly exact_div(const MultiPoly& d) const;

    FieldElem evaluate(const std::vector<FieldElem>& at) const;
    // Univariate restriction when every other variable is constant.
    UPoly<FieldElem> to_univariate(int var) const;
    static MultiPoly from_univariate(const std::vector<std::string>& vars, int var, const UPoly<FieldElem>& u);

    std::string to_string() const;

   private:
    void check_compatible(const MultiPoly& b) const;
    std::vector<std::string> vars_;
    FieldPtr field_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace folindex
