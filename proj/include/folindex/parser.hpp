#pragma once

#include <string>
#include <vector>

#include "folindex/multipoly.hpp"

namespace folindex {

/// Parses a polynomial written with integers, p/q rationals, declared variable
/// names, the field generator name, + - * ^ and parentheses. Division is only
/// allowed by nonzero constants. Throws ParseError.
MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                     const FieldPtr& field = FieldDescriptor::rationals());

/// Univariate polynomial over Q in the given variable (used for minimal polynomials).
QPoly parse_qpoly(const std::string& text, const std::string& var);

bool is_identifier(const std::string& s);

}  // namespace folindex
