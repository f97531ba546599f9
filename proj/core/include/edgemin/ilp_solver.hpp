#pragma once

#include <cstdint>
#include <stop_token>
#include <vector>

#include "edgemin/ilp_model.hpp"

namespace edgemin {

struct SolverOptions {
    /// Search stops with budget_exhausted after this many nodes.
    std::size_t node_budget = 50'000'000;
    /// Optional full assignment. Used as the first incumbent when feasible and
    /// as the preferred value when branching.
    std::vector<std::int64_t> hint;
    /// Checked once per node; a stop request reports budget_exhausted.
    std::stop_token stop;
    /// Gaussian elimination over GF(2) on equalities whose odd coefficients
    /// all sit on binaries.
    bool parity_propagation = true;
};

/// Depth-first branch-and-bound.
///
/// Variables are branched in declaration order (binaries before general
/// integers). Each node runs bound propagation on all constraints to a fixed
/// point, then parity elimination in which a product variable y = x*z with a
/// factor fixed to one is identified with the other factor. Nodes whose
/// objective lower bound from variable bounds cannot beat the incumbent are
/// pruned.
IlpSolution solve_builtin(const IlpModel& model, const SolverOptions& options = {});

}  // namespace edgemin
