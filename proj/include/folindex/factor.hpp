#pragma once

#include <utility>
#include <vector>

#include "folindex/field.hpp"
#include "folindex/upoly.hpp"

namespace folindex {

using KPoly = UPoly<FieldElem>;

/// Monic irreducible factors over Q with multiplicities (Yun square-free
/// decomposition, then Cantor-Zassenhaus modulo one large prime with subset
/// recombination). Throws ResourceCapError above degree 40.
std::vector<std::pair<QPoly, int>> factor_rational(const QPoly& f);

std::vector<mpq_class> rational_roots(const QPoly& f);

/// Monic irreducible factors over the field of f's coefficients (Q or a simple
/// extension, Trager's norm method for the latter).
std::vector<std::pair<KPoly, int>> factor_over_field(const KPoly& f, const FieldPtr& field);

/// Roots lying in the field, with multiplicities.
std::vector<std::pair<FieldElem, int>> roots_in_field(const KPoly& f, const FieldPtr& field);

KPoly to_kpoly(const QPoly& p);

}  // namespace folindex
