#pragma once

#include <string>

#include <utility>
#include <vector>

#include "folindex/exactcore.hpp"
#include "folindex/exec.hpp"

namespace folindex {

struct LocalMultiplicity {
    bool infinite = false;
    long value = 0;
    std::string method = "fulton-recursive";

    static LocalMultiplicity finite(long v, std::string m = "fulton-recursive") { return {false, v, std::move(m)}; }
    static LocalMultiplicity infinity(std::string m = "fulton-recursive") { return {true, 0, std::move(m)}; }
    std::string to_string() const { return infinite ? "INFINITE" : std::to_string(value); }
    friend bool operator==(const LocalMultiplicity& a, const LocalMultiplicity& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
};

/// Colength of (f, g) in the local ring at p, by Fulton's recursion.
LocalMultiplicity intersection_multiplicity(const MultiPoly& f, const MultiPoly& g, const Point& p);
LocalMultiplicity intersection_multiplicity_at_origin(const MultiPoly& f, const MultiPoly& g);

/// Batch form over independent pairs.
std::vector<LocalMultiplicity> intersection_multiplicities(const std::vector<std::pair<MultiPoly, MultiPoly>>& pairs,
                                                          const Point& p, Exec exec = Exec::Parallel);

/// I_p(df/dx, df/dy); requires f(p) = 0 and an isolated singularity.
long milnor_number(const MultiPoly& f, const Point& p);

/// Order of vanishing of f at p (0 when p is off the curve).
int curve_multiplicity(const MultiPoly& f, const Point& p);

}  // namespace folindex
