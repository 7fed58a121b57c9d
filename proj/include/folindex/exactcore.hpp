#pragma once

#include <map>
#include <string>
#include <vector>

#include "folindex/multipoly.hpp"
#include "folindex/series.hpp"

namespace folindex {

using Point = std::vector<FieldElem>;

/// Composite poly(assignment), all targets in one variable list.
MultiPoly substitute(const MultiPoly& poly, const std::map<std::string, MultiPoly>& assignment);
/// Composite with series targets; fails if the result truncates to zero
/// and leading_required is set.
PowerSeries substitute(const MultiPoly& poly, const std::map<std::string, PowerSeries>& assignment,
                       bool leading_required = false);

/// Sylvester resultant eliminating var (fraction-free Bareiss determinant).
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var);
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var);

/// poly(x + p).
MultiPoly translate_to_origin(const MultiPoly& poly, const Point& p);

MultiPoly homogenize(const MultiPoly& poly, const std::string& new_var, int degree);
MultiPoly dehomogenize(const MultiPoly& poly, const std::string& var);

/// Greatest common divisor, normalized to leading coefficient 1 in grlex.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);
/// Scales so the grlex leading coefficient is 1.
MultiPoly normalized(const MultiPoly& p);
/// True iff p has no repeated factor (p nonconstant); uses gcd(p, dp/dx_i).
bool is_squarefree(const MultiPoly& p);
/// Pseudo-remainder of a by b with respect to var.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, int var);

}  // namespace folindex
