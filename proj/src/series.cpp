#include "folindex/series.hpp"

#include <algorithm>
#include <sstream>

#include "folindex/errors.hpp"

namespace folindex {

PowerSeries::PowerSeries(int truncation, FieldPtr field)
    : field_(std::move(field)), c_(static_cast<size_t>(truncation), FieldElem().promoted(field_)) {}

PowerSeries::PowerSeries(int truncation, std::vector<FieldElem> coeffs) : field_(FieldDescriptor::rationals()) {
    for (const auto& c : coeffs) field_ = common_field(field_, c.field());
    coeffs.resize(static_cast<size_t>(truncation));
    c_ = std::move(coeffs);
}

PowerSeries PowerSeries::constant(int truncation, const FieldElem& c) { return monomial(truncation, c, 0); }

PowerSeries PowerSeries::monomial(int truncation, const FieldElem& c, int k) {
    PowerSeries s(truncation, c.field());
    if (k < truncation) s.c_[static_cast<size_t>(k)] = c;
    return s;
}

int PowerSeries::order() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return -1;
}

PowerSeries PowerSeries::truncated(int n) const {
    PowerSeries r = *this;
    r.c_.resize(static_cast<size_t>(std::min(n, truncation())));
    return r;
}

PowerSeries PowerSeries::derivative() const {
    PowerSeries r(std::max(0, truncation() - 1), field_);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = FieldElem(static_cast<long>(i)) * c_[i];
    return r;
}

PowerSeries PowerSeries::inverse() const {
    if (c_.empty() || c_[0].is_zero()) throw std::domain_error("series is not a unit");
    PowerSeries r(truncation(), field_);
    const FieldElem inv0 = c_[0].inverse();
    r.c_[0] = inv0;
    for (size_t n = 1; n < c_.size(); ++n) {
        FieldElem acc = FieldElem().promoted(field_);
        for (size_t k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
        r.c_[n] = -(acc * inv0);
    }
    return r;
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const size_t n = std::min(a.c_.size(), b.c_.size());
    PowerSeries r(static_cast<int>(n), common_field(a.field_, b.field_));
    for (size_t i = 0; i < n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const size_t n = std::min(a.c_.size(), b.c_.size());
    PowerSeries r(static_cast<int>(n), common_field(a.field_, b.field_));
    for (size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; i + j < n; ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

PowerSeries operator*(const FieldElem& s, const PowerSeries& a) {
    PowerSeries r(a.truncation(), common_field(a.field_, s.field()));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = s * a.c_[i];
    return r;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

PowerSeries PowerSeries::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    PowerSeries acc = constant(truncation(), FieldElem(1).promoted(field_)), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

std::string PowerSeries::to_string(const std::string& var) const {
    std::vector<std::string> vars{var};
    MultiPoly p(vars, field_);
    for (size_t i = 0; i < c_.size(); ++i) p.add_term(Exponent{static_cast<int>(i)}, c_[i]);
    std::ostringstream os;
    if (!p.is_zero()) os << p.to_string() << " + ";
    os << "O(" << var << "^" << truncation() << ")";
    return os.str();
}

PowerSeries substitute_series(const MultiPoly& p, const std::vector<PowerSeries>& at) {
    if (static_cast<int>(at.size()) != p.nvars())
        throw PreconditionError("unassigned-variable", "every variable must be assigned a series");
    int n = at.empty() ? 1 : at[0].truncation();
    FieldPtr f = p.field();
    for (const auto& s : at) {
        n = std::min(n, s.truncation());
        f = common_field(f, s.field());
    }
    // Cached powers per variable.
    std::vector<std::vector<PowerSeries>> powers(at.size());
    for (size_t i = 0; i < at.size(); ++i) {
        powers[i].push_back(PowerSeries::constant(n, FieldElem(1).promoted(f)));
        powers[i].push_back(at[i].truncated(n));
    }
    auto power = [&](size_t i, int k) -> const PowerSeries& {
        while (static_cast<int>(powers[i].size()) <= k) powers[i].push_back(powers[i].back() * powers[i][1]);
        return powers[i][static_cast<size_t>(k)];
    };
    PowerSeries acc(n, f);
    for (const auto& [e, c] : p.terms()) {
        PowerSeries t = PowerSeries::constant(n, c.promoted(f));
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * power(i, e[i]);
        acc = acc + t;
    }
    return acc;
}

}  // namespace folindex
