#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "edgemin/graph.hpp"

namespace edgemin {

/// G(n, p): each pair i < j, visited in lexicographic order, is an edge when
/// the next uniform draw is below p.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

struct BoundedDegreeOptions {
    std::size_t retry_budget = 1000;
};

/// Random connected graph with maximum degree at most d_lim.
///
/// Degrees are drawn uniformly from [1, min(d_lim, n - 1)]. An odd degree sum
/// is fixed by incrementing the first entry below the cap (or, failing that,
/// decrementing the first entry above 1). Sequences that fail Erdős–Gallai or
/// have fewer than n - 1 edges are redrawn. The realisation is Havel–Hakimi
/// followed by degree-preserving edge swaps that join components.
/// Throws std::runtime_error when the retry budget is exhausted.
Graph bounded_degree(std::size_t n, std::size_t d_lim, std::uint64_t seed, BoundedDegreeOptions opts = {});

/// Erdős–Gallai test.
bool is_graphical(std::span<const std::size_t> degrees);

/// Havel–Hakimi realisation: repeatedly connect the vertex of largest residual
/// degree to the next largest ones, ties broken by smaller index. Returns
/// nullopt for non-graphical sequences.
std::optional<Graph> havel_hakimi(std::span<const std::size_t> degrees);

/// Degree-preserving swaps that merge components; false if impossible.
bool connect_by_swaps(Graph& g);

}  // namespace edgemin
