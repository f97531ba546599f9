#include "edgemin/orbit.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <string>

namespace edgemin {

namespace {

__extension__ typedef unsigned __int128 u128;

// Packed rows for graphs with at most 16 vertices: bit (15 - j) of row i is
// the pair (i, j). Reversing the bit order makes each row's upper-triangle
// segment read MSB-first, which is the adjacency-key order.
struct PackedGraph {
    std::array<std::uint16_t, kMaxKeyVertices> rows{};
};

constexpr std::uint16_t vbit(std::size_t j) { return static_cast<std::uint16_t>(1U << (15 - j)); }

AdjacencyKey pack_key(const PackedGraph& g, std::size_t n) {
    u128 acc = 0;
    std::size_t total = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t len = n - 1 - i;
        const unsigned seg = (static_cast<unsigned>(g.rows[i]) >> (16 - n)) & ((1U << len) - 1U);
        acc = (acc << len) | seg;
        total += len;
    }
    if (total > 0) acc <<= (128 - total);
    return {static_cast<std::uint64_t>(acc >> 64), static_cast<std::uint64_t>(acc)};
}

PackedGraph unpack_key(const AdjacencyKey& key, std::size_t n) {
    PackedGraph g;
    u128 acc = (static_cast<u128>(key.hi) << 64) | key.lo;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (acc >> 127) {
                g.rows[i] |= vbit(j);
                g.rows[j] |= vbit(i);
            }
            acc <<= 1;
        }
    }
    return g;
}

PackedGraph pack(const Graph& g) {
    PackedGraph p;
    for (const auto& [i, j] : g.edges()) {
        p.rows[i] |= vbit(j);
        p.rows[j] |= vbit(i);
    }
    return p;
}

}  // namespace

std::size_t OrbitResult::edge_count(std::size_t i) const {
    const auto& k = keys_.at(i);
    return static_cast<std::size_t>(std::popcount(k.hi) + std::popcount(k.lo));
}

std::optional<std::size_t> OrbitResult::find(const Graph& g) const {
    if (g.size() != n_) return std::nullopt;
    const auto it = index_.find(adjacency_key(g));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Vertex> OrbitResult::sequence_to(std::size_t i) const {
    std::vector<Vertex> seq;
    for (std::size_t cur = i; cur != 0; cur = parent_.at(cur)) seq.push_back(via_[cur]);
    std::reverse(seq.begin(), seq.end());
    return seq;
}

OrbitResult enumerate_orbit(const Graph& g, std::size_t limit) {
    if (limit < 1) throw std::invalid_argument("orbit limit must be at least 1");
    if (limit > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("orbit limit exceeds 32-bit member indices");
    OrbitResult out;
    out.n_ = g.size();
    if (g.size() > kMaxKeyVertices)
        throw std::invalid_argument("orbit enumeration supports at most " + std::to_string(kMaxKeyVertices) +
                                    " vertices");
    out.keys_.push_back(pack_key(pack(g), g.size()));
    out.parent_.push_back(0);
    out.via_.push_back(0);
    out.index_.emplace(out.keys_[0], 0);

    for (std::size_t head = 0; head < out.keys_.size(); ++head) {
        const PackedGraph current = unpack_key(out.keys_[head], out.n_);
        for (Vertex v = 0; v < out.n_; ++v) {
            const std::uint16_t nv = current.rows[v];
            if (std::popcount(nv) < 2) continue;  // complementing a single neighbour is a no-op
            PackedGraph next = current;
            for (std::uint16_t bits = nv; bits; bits &= static_cast<std::uint16_t>(bits - 1)) {
                const auto u = static_cast<std::size_t>(15 - std::countr_zero(bits));
                next.rows[u] ^= static_cast<std::uint16_t>(nv ^ vbit(u));
            }
            const AdjacencyKey key = pack_key(next, out.n_);
            if (out.index_.contains(key)) continue;
            if (out.keys_.size() >= limit) {
                out.truncated_ = true;
                return out;
            }
            const auto idx = static_cast<std::uint32_t>(out.keys_.size());
            out.keys_.push_back(key);
            out.parent_.push_back(static_cast<std::uint32_t>(head));
            out.via_.push_back(static_cast<std::uint8_t>(v));
            out.index_.emplace(key, idx);
        }
    }
    return out;
}

MerResult exact_mer(const Graph& g, std::size_t limit) {
    const OrbitResult orbit = enumerate_orbit(g, limit);
    if (orbit.truncated())
        throw OrbitTruncated("orbit exceeded " + std::to_string(limit) + " members before closure");
    std::size_t best = 0;
    for (std::size_t i = 1; i < orbit.size(); ++i) {
        const std::size_t e = orbit.edge_count(i);
        const std::size_t eb = orbit.edge_count(best);
        if (e < eb || (e == eb && orbit.key(i) < orbit.key(best))) best = i;
    }
    return {orbit.member(best), orbit.sequence_to(best), orbit.size()};
}

std::optional<std::vector<Vertex>> lc_path(const Graph& g, const Graph& h, std::size_t limit) {
    if (g.size() != h.size()) throw std::invalid_argument("graphs must have the same number of vertices");
    // BFS discovery order is by distance, so the first hit is a shortest path.
    const OrbitResult orbit = enumerate_orbit(g, limit);
    if (auto idx = orbit.find(h)) return orbit.sequence_to(*idx);
    if (orbit.truncated())
        throw OrbitTruncated("orbit exceeded " + std::to_string(limit) + " members before reaching the target");
    return std::nullopt;
}

bool is_vertex_minor(const Graph& g, const Graph& h, std::span<const Vertex> subset, std::size_t limit) {
    if (h.size() != subset.size()) throw std::invalid_argument("subset size must equal h's vertex count");
    std::vector<bool> seen(g.size(), false);
    for (Vertex v : subset) {
        if (v >= g.size() || seen[v]) throw std::invalid_argument("subset must list distinct vertices of g");
        seen[v] = true;
    }
    const OrbitResult orbit = enumerate_orbit(g, limit);
    for (std::size_t i = 0; i < orbit.size(); ++i)
        if (orbit.member(i).induced(subset) == h) return true;
    if (orbit.truncated())
        throw OrbitTruncated("orbit exceeded " + std::to_string(limit) + " members before closure");
    return false;
}

}  // namespace edgemin
