#pragma once

#include <cstddef>
#include <vector>

#include "edgemin/graph.hpp"

namespace edgemin {

/// Node of a probabilistic fusion tree.
///
/// A leaf is one GHZ-3 resource state. A merge node fuses the states of its
/// two children; a close node performs one fusion inside a single connected
/// piece (an edge that closes a cycle). A failed fusion destroys its inputs,
/// so with success probability p each internal node costs
///     resources = (sum of child resources) / p
///     fusions   = (sum of child fusions + 1) / p.
struct FusionNode {
    enum class Kind { leaf, merge, close };
    Kind kind = Kind::leaf;
    int left = -1;
    int right = -1;
    double expected_resources = 1.0;
    double expected_fusions = 0.0;
};

enum class PairingRule {
    greedy,      ///< close cycle edges first, else merge the cheapest adjacent pair
    sequential,  ///< edges in lexicographic order
};

struct FusionPlan {
    std::vector<FusionNode> nodes;
    /// One root per connected component of the target.
    std::vector<int> roots;
    std::size_t ghz3_count = 0;
    std::size_t fusion_count = 0;

    double expected_resources() const;
    double expected_fusions() const;
};

/// Simplified fusion network for a target graph state.
///
/// Vertex v of degree d becomes a (d+1)-qubit GHZ state made from
/// max(1, d-1) GHZ-3 leaves joined by a balanced tree of merges
/// (GHZ_a + GHZ_b -> GHZ_{a+b-2}). Every target edge is then one fusion
/// between the pieces holding its endpoints.
FusionPlan fusion_plan(const Graph& target, double p, PairingRule rule = PairingRule::greedy);

}  // namespace edgemin
