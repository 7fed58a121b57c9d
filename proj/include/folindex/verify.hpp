#pragma once

#include <map>
#include <string>
#include <vector>

#include "folindex/exec.hpp"
#include "folindex/foliation.hpp"

namespace folindex {

enum class Theorem { BAUM_BOTT, COR_SEH, COR_ISO, TOTAL_GSV };
std::string theorem_name(Theorem t);
Theorem theorem_from_name(const std::string& s);

/// One summand: weight * value, weight = sign * conjugacy_size.
/// form 1 feeds rhs; form 2 feeds rhs_alt (second right-hand side of COR_ISO).
struct PointTerm {
    std::string point;
    std::string kind;  // PH, LOG, GSV, SCHWARTZ, MILNOR
    long value = 0;
    long weight = 1;
    int form = 1;
};

struct GlobalReport {
    Theorem theorem = Theorem::BAUM_BOTT;
    long lhs = 0;
    long rhs = 0;
    bool has_rhs_alt = false;
    long rhs_alt = 0;
    std::vector<PointTerm> per_point;
    std::vector<std::string> assumptions;
    std::vector<std::string> evidence;
    bool pass = false;

    /// Sum of per_point for the given form.
    long recompute(int form) const;
};

GlobalReport verify_baum_bott(const ProjFoliation& F, Exec exec = Exec::Parallel);
/// bases: optional Saito bases keyed by ProjPoint::label(), in local coordinates at the origin.
GlobalReport verify_log_seh(const ProjFoliation& F, const MultiPoly& D, const std::map<std::string, LogBasis>& bases = {},
                            Exec exec = Exec::Parallel);
GlobalReport verify_isolated(const ProjFoliation& F, const MultiPoly& D, Exec exec = Exec::Parallel);
GlobalReport verify_total_gsv(const ProjFoliation& F, const MultiPoly& D, Exec exec = Exec::Parallel);

}  // namespace folindex
