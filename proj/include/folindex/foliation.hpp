#pragma once

#include <array>
#include <string>
#include <vector>

#include "folindex/indices.hpp"

namespace folindex {

/// Chart 0: z != 0, coordinates (x, y). Chart 1: x != 0, (u, v) = (y/x, z/x).
/// Chart 2: y != 0, (s, t) = (x/y, z/y). A point belongs to the first chart containing it.
inline const std::array<std::vector<std::string>, 3> kChartVars{
    std::vector<std::string>{"x", "y"}, std::vector<std::string>{"u", "v"}, std::vector<std::string>{"s", "t"}};
inline const std::vector<std::string> kHomogeneousVars{"x", "y", "z"};

/// Zero of a chart system. Over an extension the point stands for
/// conjugacy_size Galois-conjugate points.
struct ProjPoint {
    int chart = 0;
    FieldPtr field;
    Point coords;  // chart coordinates
    int conjugacy_size = 1;

    std::string label() const;  // homogeneous coordinates
};

/// One-dimensional foliation of degree d on P^2, twisted by L = O(1 - d).
struct ProjFoliation {
    int degree = 0;
    bool line_at_infinity_invariant = false;
    MultiPoly P, Q, R;  // homogeneous degree-d field in x, y, z, modulo the radial field
    std::array<VectorFieldGerm, 3> charts;

    long twist() const { return 1 - degree; }
    static ProjFoliation from_affine(const MultiPoly& a, const MultiPoly& b);
};

/// Dehomogenize H in x, y, z to the variables of the given chart.
MultiPoly chart_poly(const MultiPoly& H, int chart);

/// Common zeros of gens (rational coefficients, chart variables) owned by the chart.
std::vector<ProjPoint> chart_zeros(const std::vector<MultiPoly>& gens, int chart);
/// All points of P^2 where every homogeneous H vanishes.
std::vector<ProjPoint> projective_zeros(const std::vector<MultiPoly>& hs);

std::vector<ProjPoint> singular_points(const ProjFoliation& F);
/// Singular points of the reduced projective curve H = 0.
std::vector<ProjPoint> curve_singular_points(const MultiPoly& H);

/// Chart representative at p, over p's field, translated to the origin.
VectorFieldGerm localize(const ProjFoliation& F, const ProjPoint& p);
/// Local equation of H at p, over p's field, translated to the origin.
MultiPoly localize(const MultiPoly& H, const ProjPoint& p);

bool is_log_along(const ProjFoliation& F, const MultiPoly& H);

/// Random-point check that chart representatives agree on overlaps up to a unit.
bool charts_compatible(const ProjFoliation& F, const Point& at);

}  // namespace folindex
