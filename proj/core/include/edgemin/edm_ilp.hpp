#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "edgemin/annealing.hpp"
#include "edgemin/graph.hpp"
#include "edgemin/ilp_model.hpp"
#include "edgemin/ilp_solver.hpp"
#include "edgemin/symplectic.hpp"

namespace edgemin {

/// Edge-minimisation ILP for an input graph G.
///
/// Unknowns are the output adjacency A_H (one binary per pair i < j) and the
/// diagonals p, q, r, s of a local symplectic map sending H to G. With the
/// products ZP_i_j = P_i * AH[i,j] and ZR_a_j = R_a * AH[a,j], entry (i, j) of
/// P A_H + Q + A_G R A_H + A_G S = 0 becomes the integer equality
///     [i!=j] ZP_i_j + [i=j] Q_i + sum_{a in N_G(i), a != j} ZR_a_j
///         + G[i,j] S_j - 2 B_i_j = 0.
/// Each product is linearised by y <= x, y <= z, y >= x + z - 1, and
/// ZPS_a + ZRQ_a = 1 encodes p_a s_a + r_a q_a = 1.
///
/// Variables are declared witness first (P, R, Q, S), then AH, the products
/// and B, which is also the built-in solver's branching order.
IlpModel build_edm_ilp(const Graph& g, const WeightMatrix* weights = nullptr);

/// Closed forms for the model size at n vertices.
std::size_t edm_ilp_variable_count(std::size_t n);
std::size_t edm_ilp_constraint_count(std::size_t n);

/// Full feasible assignment for H = G and the identity witness.
std::vector<std::int64_t> identity_assignment(const IlpModel& model, const Graph& g);

/// Graph read from the AH variables of an assignment.
Graph decode_graph(const IlpModel& model, std::size_t n, std::span<const std::int64_t> assignment);
/// Witness mapping the decoded graph to the input graph.
SymplecticWitness decode_witness(const IlpModel& model, std::size_t n, std::span<const std::int64_t> assignment);

struct EdmIlpResult {
    Graph graph;
    SymplecticWitness witness;
    IlpSolution solution;
};

/// Builds and solves the EDM ILP with the identity as warm start.
EdmIlpResult edm_ilp(const Graph& g, const WeightMatrix* weights = nullptr, SolverOptions options = {});

struct SailpResult {
    SaResult sa;
    /// ILP solved on the annealing output.
    EdmIlpResult ilp;
};

/// Annealing first, then the ILP on the annealed graph.
SailpResult edm_sailp(const Graph& g, const SaConfig& cfg, SolverOptions options = {});

enum class IsolatedVertexPolicy {
    reject,               ///< throw if h has an isolated vertex
    zero_lowest_partner,  ///< the pair (k, first other vertex listed in the subset) gets weight 0
};

/// Weights whose minimum is -|E(h)| exactly when h is a vertex-minor of g on
/// `subset` (vertex k of h is subset[k]): -1 on edges of h, +1 on non-edges
/// inside the subset, 0 elsewhere.
WeightMatrix vertex_minor_weights(const Graph& g, const Graph& h, std::span<const Vertex> subset,
                                  IsolatedVertexPolicy policy = IsolatedVertexPolicy::reject);

struct VertexMinorDecision {
    bool is_minor = false;
    double optimum = 0.0;
    SolveStatus status = SolveStatus::optimal;
};

VertexMinorDecision vertex_minor_by_ilp(const Graph& g, const Graph& h, std::span<const Vertex> subset,
                                        IsolatedVertexPolicy policy = IsolatedVertexPolicy::reject,
                                        SolverOptions options = {});

}  // namespace edgemin
