#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folindex/exactcore.hpp"

namespace folindex {

/// Vector field a*d/dx + b*d/dy on the plane, considered as a germ at base.
/// Components stay in the caller's coordinates; index routines translate.
struct VectorFieldGerm {
    MultiPoly a, b;
    Point base;  // empty means the origin

    VectorFieldGerm() = default;
    VectorFieldGerm(MultiPoly a_, MultiPoly b_, Point base_ = {});

    const Point& point() const;
    VectorFieldGerm at_origin() const;
    // nu(f) = a*f_x + b*f_y
    MultiPoly apply(const MultiPoly& f) const;
    std::string to_string() const;
};

/// det(chi1, chi2) = chi1.a*chi2.b - chi1.b*chi2.a
MultiPoly det(const VectorFieldGerm& u, const VectorFieldGerm& v);

struct LogBasis {
    VectorFieldGerm chi1, chi2;
    MultiPoly divisor;
};

enum class IndexKind { PH, EU_OBSTRUCTION, GSV, SCHWARTZ, LOG, MU_ALONG_CURVE, POLAR, CHI_NUMBER };

std::string kind_name(IndexKind k);
IndexKind kind_from_name(const std::string& s);

struct IndexReport {
    IndexKind kind = IndexKind::PH;
    long value = 0;
    std::vector<std::pair<std::string, long>> ingredients;
    std::vector<std::string> assumptions;

    long ingredient(const std::string& name) const;
    void add(const std::string& name, long v) { ingredients.emplace_back(name, v); }
};

/// Local ambient dimension; every sign (-1)^(n-1) below uses it.
inline constexpr int kAmbientDim = 2;

bool is_logarithmic(const VectorFieldGerm& nu, const MultiPoly& f);

IndexReport ph_index(const VectorFieldGerm& nu);
IndexReport euler_obstruction_field(const VectorFieldGerm& nu, const MultiPoly& f);
IndexReport gsv_index(const VectorFieldGerm& nu, const MultiPoly& f);
IndexReport schwartz_index(const VectorFieldGerm& nu, const MultiPoly& f);
IndexReport log_index(const VectorFieldGerm& nu, const LogBasis& basis);
IndexReport mu_along_curve(const VectorFieldGerm& nu, const MultiPoly& c);
IndexReport polar_intersection(const VectorFieldGerm& nu, const MultiPoly& c);
IndexReport chi_number(const VectorFieldGerm& nu, const std::vector<std::pair<MultiPoly, long>>& divisor);

/// u with det(chi1, chi2) = u*f and u(base) != 0; throws PreconditionError otherwise.
MultiPoly saito_check(const VectorFieldGerm& chi1, const VectorFieldGerm& chi2, const MultiPoly& f);

/// Positive weights (w1, w2) with f(t^w1 x, t^w2 y) = t f, in the given coordinates.
std::optional<std::pair<mpq_class, mpq_class>> weighted_homogeneous_weights(const MultiPoly& f);

/// Free basis of Der(-log f) at base when it can be written down directly:
/// smooth points, and weighted-homogeneous germs (Euler field + Hamiltonian).
std::optional<LogBasis> automatic_log_basis(const MultiPoly& f, const Point& base);

/// Number of local analytic branches of f at p (conjugates counted).
int local_branch_count(const MultiPoly& f, const Point& p);

}  // namespace folindex
