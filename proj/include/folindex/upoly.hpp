#pragma once

#include <gmpxx.h>

#include <cassert>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace folindex {

namespace detail {

template <class T>
bool coeff_is_zero(const T& t) {
    if constexpr (requires { t.is_zero(); }) {
        return t.is_zero();
    } else {
        return sgn(t) == 0;
    }
}

}  // namespace detail

/// Dense univariate polynomial over a coefficient type T. T is either a
/// field (mpq_class, FieldElem) or, for the pseudo-division helpers, a ring.
/// A default-constructed T must be the zero of T.
template <class T>
class UPoly {
   public:
    UPoly() = default;
    explicit UPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly constant(T c) { return UPoly(std::vector<T>{std::move(c)}); }
    static UPoly monomial(T c, int k) {
        std::vector<T> v(static_cast<size_t>(k) + 1);
        v[static_cast<size_t>(k)] = std::move(c);
        return UPoly(std::move(v));
    }
    static UPoly x() { return monomial(T(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : T(); }
    const T& lc() const {
        assert(!c_.empty());
        return c_.back();
    }
    // Order of vanishing at 0; -1 for the zero polynomial.
    int valuation() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!detail::coeff_is_zero(c_[i])) return static_cast<int>(i);
        return -1;
    }

    template <class U>
    U eval(const U& at) const {
        U acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + U(*it);
        return acc;
    }

    UPoly derivative() const {
        std::vector<T> d;
        for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * T(static_cast<long>(i)));
        return UPoly(std::move(d));
    }

    UPoly monic() const {
        if (c_.empty()) return *this;
        T inv = T(1) / lc();
        std::vector<T> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(c * inv);
        return UPoly(std::move(v));
    }

    // this(inner(x))
    UPoly compose(const UPoly& inner) const {
        UPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
        return acc;
    }

    UPoly operator-() const {
        std::vector<T> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(-c);
        return UPoly(std::move(v));
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<T> v(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) {
            if (i < a.c_.size()) v[i] = a.c_[i];
            if (i < b.c_.size()) v[i] = v[i] + b.c_[i];
        }
        return UPoly(std::move(v));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> v(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(v));
    }
    friend UPoly operator*(const T& s, const UPoly& b) {
        std::vector<T> v;
        v.reserve(b.c_.size());
        for (const auto& c : b.c_) v.push_back(s * c);
        return UPoly(std::move(v));
    }
    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!detail::coeff_is_zero(a.c_[i] - b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

   private:
    void trim() {
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class T>
std::pair<UPoly<T>, UPoly<T>> divmod(const UPoly<T>& a, const UPoly<T>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<T> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UPoly<T>{}, a};
    std::vector<T> q(static_cast<size_t>(a.degree() - db) + 1);
    const T inv = T(1) / b.lc();
    for (int k = a.degree(); k >= db; --k) {
        const T& top = r[static_cast<size_t>(k)];
        if (detail::coeff_is_zero(top)) continue;
        T f = top * inv;
        for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k - db + j)] = r[static_cast<size_t>(k - db + j)] - f * b.coeffs()[static_cast<size_t>(j)];
        q[static_cast<size_t>(k - db)] = std::move(f);
    }
    r.resize(static_cast<size_t>(db));
    return {UPoly<T>(std::move(q)), UPoly<T>(std::move(r))};
}

template <class T>
UPoly<T> operator%(const UPoly<T>& a, const UPoly<T>& b) {
    return divmod(a, b).second;
}

/// Exact quotient; throws if b does not divide a.
template <class T>
UPoly<T> exact_quotient(const UPoly<T>& a, const UPoly<T>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

/// Monic gcd over a field (zero if both inputs are zero).
template <class T>
UPoly<T> gcd(UPoly<T> a, UPoly<T> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
template <class T>
std::tuple<UPoly<T>, UPoly<T>, UPoly<T>> ext_gcd(const UPoly<T>& a, const UPoly<T>& b) {
    UPoly<T> r0 = a, r1 = b;
    UPoly<T> s0 = UPoly<T>::constant(T(1)), s1;
    UPoly<T> t0, t1 = UPoly<T>::constant(T(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        auto s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        auto t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const T inv = T(1) / r0.lc();
    return {inv * r0, inv * s0, inv * t0};
}

template <class T>
UPoly<T> squarefree_part(const UPoly<T>& f) {
    if (f.degree() <= 0) return f.monic();
    return exact_quotient(f, gcd(f, f.derivative())).monic();
}

/// Yun's square-free decomposition: f = lc * prod_i (g_i)^i, each g_i monic square-free.
/// Returns (g_i, i) for the non-constant g_i.
template <class T>
std::vector<std::pair<UPoly<T>, int>> squarefree_decomposition(const UPoly<T>& f) {
    std::vector<std::pair<UPoly<T>, int>> out;
    if (f.degree() <= 0) return out;
    auto a = f.monic();
    auto b = a.derivative();
    auto c = gcd(a, b);
    auto w = exact_quotient(a, c);
    auto y = exact_quotient(b, c);
    auto z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        auto g = gcd(w, z);
        if (g.degree() > 0) out.emplace_back(g, i);
        w = exact_quotient(w, g);
        y = exact_quotient(z, g);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

using QPoly = UPoly<mpq_class>;

}  // namespace folindex
