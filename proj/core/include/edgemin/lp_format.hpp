#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "edgemin/ilp_model.hpp"

namespace edgemin {

/// CPLEX LP text: Minimize, Subject To, Bounds, Binaries, Generals, End.
/// Variables and constraints appear in declaration order.
std::string export_lp(const IlpModel& model);

/// Reads "name value" lines (blank lines and lines starting with '#' are
/// skipped). Unlisted variables take value 0. The status is optimal if the
/// assignment is feasible and infeasible otherwise.
IlpSolution import_solution(const IlpModel& model, std::string_view text);

inline constexpr const char* kSolverEnvVar = "EDGEMIN_ILP_SOLVER";

/// Runs `solver <lp path> <solution path>` inside `work_dir` and imports the
/// result. Returns nullopt if the solver exits non-zero or writes nothing.
std::optional<IlpSolution> solve_external(const IlpModel& model, const std::string& solver,
                                          const std::string& work_dir);

}  // namespace edgemin
