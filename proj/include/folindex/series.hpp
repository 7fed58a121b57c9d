#pragma once

#include <string>
#include <vector>

#include "folindex/field.hpp"
#include "folindex/multipoly.hpp"

namespace folindex {

/// Truncated power series c_0 + c_1 t + ... + c_{N-1} t^{N-1} + O(t^N).
class PowerSeries {
   public:
    PowerSeries() : field_(FieldDescriptor::rationals()) {}
    PowerSeries(int truncation, FieldPtr field);
    PowerSeries(int truncation, std::vector<FieldElem> coeffs);

    static PowerSeries constant(int truncation, const FieldElem& c);
    // c * t^k
    static PowerSeries monomial(int truncation, const FieldElem& c, int k);

    int truncation() const noexcept { return static_cast<int>(c_.size()); }
    const FieldPtr& field() const noexcept { return field_; }
    const FieldElem& operator[](int i) const { return c_.at(static_cast<size_t>(i)); }
    const std::vector<FieldElem>& coeffs() const noexcept { return c_; }
    // Index of the first nonzero coefficient; -1 if zero up to truncation.
    int order() const;
    bool is_zero_to_truncation() const { return order() < 0; }

    PowerSeries truncated(int n) const;
    PowerSeries derivative() const;
    PowerSeries inverse() const;  // requires a unit

    PowerSeries operator-() const;
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const FieldElem& s, const PowerSeries& a);
    friend bool operator==(const PowerSeries& a, const PowerSeries& b);
    PowerSeries pow(int e) const;

    std::string to_string(const std::string& var = "t") const;

   private:
    FieldPtr field_;
    std::vector<FieldElem> c_;
};

/// p(s_1(t), ..., s_n(t)) truncated at the smallest input truncation.
PowerSeries substitute_series(const MultiPoly& p, const std::vector<PowerSeries>& at);

}  // namespace folindex
