#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "edgemin/graph.hpp"

namespace edgemin {

inline constexpr std::size_t kDefaultOrbitLimit = 5'000'000;

/// The orbit was cut off by its member limit before the answer was known.
class OrbitTruncated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Labelled LC orbit discovered by breadth-first search from a seed graph.
///
/// Members are stored by adjacency key in discovery order; member 0 is the seed
/// and every other member records its BFS parent and the complemented vertex.
class OrbitResult {
public:
    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t size() const noexcept { return keys_.size(); }
    bool truncated() const noexcept { return truncated_; }

    const AdjacencyKey& key(std::size_t i) const { return keys_.at(i); }
    Graph member(std::size_t i) const { return graph_from_key(keys_.at(i), n_); }
    std::size_t edge_count(std::size_t i) const;

    std::optional<std::size_t> find(const Graph& g) const;
    bool contains(const Graph& g) const { return find(g).has_value(); }

    /// Complementation sequence from the seed to member i.
    std::vector<Vertex> sequence_to(std::size_t i) const;

private:
    friend OrbitResult enumerate_orbit(const Graph& g, std::size_t limit);

    std::size_t n_ = 0;
    bool truncated_ = false;
    std::vector<AdjacencyKey> keys_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint8_t> via_;
    std::unordered_map<AdjacencyKey, std::uint32_t, AdjacencyKeyHash> index_;
};

/// BFS over local complementations. Stops with truncated() set once adding a
/// member would exceed `limit`. Requires g.size() <= kMaxKeyVertices.
OrbitResult enumerate_orbit(const Graph& g, std::size_t limit = kDefaultOrbitLimit);

struct MerResult {
    Graph graph;
    std::vector<Vertex> sequence;
    std::size_t orbit_size = 0;
};

/// Minimum-edge orbit member, ties broken by the smallest adjacency bit-string,
/// with the complementation sequence reaching it. Throws OrbitTruncated.
MerResult exact_mer(const Graph& g, std::size_t limit = kDefaultOrbitLimit);

/// Shortest complementation sequence from g to the labelled graph h, or
/// nullopt if h lies outside the orbit. Throws OrbitTruncated if the search
/// stops before either finding h or closing the orbit.
std::optional<std::vector<Vertex>> lc_path(const Graph& g, const Graph& h, std::size_t limit = kDefaultOrbitLimit);

/// Whether some orbit member of g induces exactly h on `subset`, where vertex k
/// of h corresponds to subset[k]. Throws OrbitTruncated.
bool is_vertex_minor(const Graph& g, const Graph& h, std::span<const Vertex> subset,
                     std::size_t limit = kDefaultOrbitLimit);

}  // namespace edgemin
