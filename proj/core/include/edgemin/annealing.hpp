#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edgemin/graph.hpp"
#include "edgemin/rng.hpp"

namespace edgemin {

enum class SelectionRule {
    guided,   ///< candidate_vertices: bias toward large clustering-times-degree
    uniform,  ///< any vertex with equal probability
};

struct SaConfig {
    std::size_t k_max = 100;
    double t1 = 100.0;
    std::uint64_t seed = 0;
    /// Energy is the edge count when absent, otherwise the summed edge weights.
    std::optional<WeightMatrix> weights;
    SelectionRule selection = SelectionRule::guided;
    bool record_trace = true;

    void validate(std::size_t n) const;
};

struct SaResult {
    Graph best_graph;
    double best_energy = 0.0;
    /// Replaying this on the input yields best_graph.
    std::vector<Vertex> lc_sequence;
    /// Energy of the current state after each iteration k = 1..k_max.
    std::vector<double> energy_trace;
    std::size_t accepted_moves = 0;
};

/// t1 / log2(k + 1) for k >= 1.
double temperature(std::size_t k, double t1);

/// Energy change of complementing at v: each neighbour pair flips.
double lc_energy_delta(const Graph& g, Vertex v, const WeightMatrix* weights);

double graph_energy(const Graph& g, const WeightMatrix* weights);

/// Vertices eligible for complementation at iteration k of k_max.
///
/// Let U be the ascending distinct values of clustering(v) * degree(v) and
/// c = floor(k * |U| / k_max). One value is drawn uniformly from positions
/// c+1 .. |U|-1 of U (or the maximum when that range is empty) and every
/// vertex attaining it is returned, in increasing order.
std::vector<Vertex> candidate_vertices(const Graph& g, std::size_t k, std::size_t k_max, Rng& rng);
std::vector<Vertex> candidate_vertices(const Graph& g, std::size_t k, std::size_t k_max, std::uint64_t seed);

/// Simulated annealing over the LC orbit with Metropolis acceptance; returns
/// the best state visited, including the input.
SaResult edm_sa(const Graph& g, const SaConfig& cfg);

}  // namespace edgemin
