#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "folindex/confun.hpp"
#include "folindex/foliation.hpp"
#include "folindex/verify.hpp"

namespace folindex::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

struct GermProblem {
    std::optional<VectorFieldGerm> field;
    std::optional<MultiPoly> divisor;
    std::optional<std::pair<VectorFieldGerm, VectorFieldGerm>> log_basis;
    std::vector<std::pair<MultiPoly, long>> balanced_divisor;
};

struct FoliationProblem {
    MultiPoly a, b;                    // affine field, variables renamed to x, y
    std::optional<MultiPoly> divisor;  // homogeneous in x, y, z
};

/// Parsed ProblemFile. `source` is the document as read, echoed into reports.
struct Problem {
    FieldPtr field = FieldDescriptor::rationals();
    std::vector<std::string> variables;
    std::optional<GermProblem> germ;
    std::optional<FoliationProblem> foliation;
    std::optional<Json> chern;
    Json source;
};

Problem parse_problem(const Json& doc);
Problem read_problem(const std::string& path);

/// Integers travel as decimal strings; plain JSON numbers are accepted on input.
long json_long(const Json& j, const std::string& what);
std::string dec(long v);

/// --kind spelling (ph, euobs, gsv, ...) to IndexKind.
IndexKind kind_from_flag(const std::string& flag);
Theorem theorem_from_flag(const std::string& flag);

/// Constructible function expression: integer combinations of 1[W], 1[0],
/// 1[f], Eu[f], Psi[f] and Phi[f], e.g. "2*Eu[y^2 - x^3] - 1[0]".
ConstructibleFn parse_confun(const std::string& text, const std::vector<std::string>& vars,
                             const FieldPtr& field = FieldDescriptor::rationals());

Json to_json(const IndexReport& r);
Json to_json(const GlobalReport& r);
IndexReport index_report_from_json(const Json& j);
GlobalReport global_report_from_json(const Json& j);

Json run_index(const Problem& p, IndexKind kind);
Json run_verify(const Problem& p, Theorem t, Exec exec = Exec::Parallel);
Json run_puiseux(const Problem& p, std::optional<int> precision = std::nullopt);
Json run_confun(const Problem& p, const std::string& expression);
Json run_chern(const Problem& p);

/// Human-readable rendering of any report produced above.
std::string render(const Json& report);

/// Whole command line (args[0] is the program name). Returns the exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace folindex::cli
