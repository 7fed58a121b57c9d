#pragma once

#include <functional>
#include <string>
#include <vector>

#include "folindex/errors.hpp"
#include "folindex/exactcore.hpp"
#include "folindex/localmult.hpp"
#include "folindex/series.hpp"

namespace folindex {

/// Raised when a truncation order is too small to decide; carries the order
/// that was tried. Callers with adaptive precision retry with a larger one.
class InsufficientPrecision : public PreconditionError {
   public:
    InsufficientPrecision(int tried, const std::string& what)
        : PreconditionError("insufficient-precision",
                            what + " (truncation order " + std::to_string(tried) + " too small)"),
          tried_(tried) {}
    int tried() const noexcept { return tried_; }

   private:
    int tried_;
};

/// One local branch (x(t), y(t)) of a plane curve, in coordinates centred at
/// `base`. A branch over an extension stands for conjugacy_size conjugates.
struct Branch {
    FieldPtr field;
    PowerSeries x, y;
    int multiplicity = 1;
    int conjugacy_size = 1;
    Point base;
    MultiPoly curve;  // local equation, translated to the origin

    int truncation() const { return x.truncation(); }
    std::string to_string() const;
};

/// Order of g along a branch; zero_to_truncation when every computed
/// coefficient vanishes.
struct BranchOrder {
    bool zero_to_truncation = false;
    int value = 0;
};

/// Precision cap (FOLINDEX_PRECISION_CAP, default 512).
int precision_cap();
int initial_precision(const MultiPoly& f);

/// Runs fn(N) for N = start, 2*start, ... while it throws InsufficientPrecision.
template <class Fn>
auto with_adaptive_precision(int start, Fn&& fn) -> decltype(fn(start)) {
    const int cap = precision_cap();
    for (int n = std::min(start, cap);; n = std::min(2 * n, cap)) {
        try {
            return fn(n);
        } catch (const InsufficientPrecision& e) {
            if (n >= cap)
                throw ResourceCapError("precision-cap", std::string(e.what()) + "; cap " + std::to_string(cap) + " reached");
        }
    }
}

/// Branches of V(f) at p, truncated at `precision`. f must be reduced and vanish at p.
std::vector<Branch> branches(const MultiPoly& f, const Point& p, int precision);

/// ord_t g(x(t), y(t)); g is in global coordinates and is translated to the branch base.
BranchOrder ord_along_branch(const Branch& b, const MultiPoly& g);

/// Vanishing order of the Nash lift of nu = (a, b) along the branch: min(ord a(gamma), ord b(gamma)).
/// Fields are in global coordinates. Throws on non-tangency or a field vanishing on the branch.
int nash_lift_order(const Branch& b, const MultiPoly& a, const MultiPoly& bb);

/// Sum over branches of conjugacy_size * ord_along_branch; the Puiseux oracle
/// for intersection multiplicity (f must be square-free).
LocalMultiplicity intersection_multiplicity_puiseux(const MultiPoly& f, const MultiPoly& g, const Point& p);

}  // namespace folindex
