#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edgemin/gf2_matrix.hpp"

namespace edgemin {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph stored as a symmetric bit-matrix with zero diagonal.
///
/// Each row is the neighbourhood bit-set of one vertex, so local
/// complementation at v is a word-wise XOR of N(v) into the rows of N(v).
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    static Graph from_edges(std::size_t n, std::span<const Edge> edges);
    static Graph from_adjacency(const Gf2Matrix& adjacency);

    static Graph complete(std::size_t n);
    static Graph path(std::size_t n);
    static Graph cycle(std::size_t n);
    /// Star with centre 0 and leaves 1..n-1.
    static Graph star(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    std::size_t words_per_row() const noexcept { return words_; }

    bool has_edge(Vertex u, Vertex v) const noexcept {
        return (bits_[u * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
    }
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    void toggle_edge(Vertex u, Vertex v);

    std::span<const Word> row(Vertex v) const noexcept { return {bits_.data() + v * words_, words_}; }

    std::size_t degree(Vertex v) const noexcept;
    std::size_t edge_count() const noexcept;
    std::vector<Vertex> neighbors(Vertex v) const;
    /// Edges (i, j) with i < j in lexicographic order.
    std::vector<Edge> edges() const;

    /// Number of edges among the neighbours of v.
    std::size_t neighbourhood_edges(Vertex v) const noexcept;

    /// Complement the subgraph induced on N(v), in place.
    void local_complement_in_place(Vertex v);

    /// Induced subgraph on `vertices`, relabelled 0..k-1 in the given order.
    Graph induced(std::span<const Vertex> vertices) const;

    bool is_connected() const;

    Gf2Matrix adjacency() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(Vertex v) const;

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> bits_;
};

/// Symmetric real matrix of per-pair costs with zero diagonal.
class WeightMatrix {
public:
    WeightMatrix() = default;
    explicit WeightMatrix(std::size_t n) : n_(n), w_(n * n, 0.0) {}

    std::size_t size() const noexcept { return n_; }
    double at(Vertex i, Vertex j) const noexcept { return w_[i * n_ + j]; }
    /// Sets both (i, j) and (j, i); i == j is rejected.
    void set(Vertex i, Vertex j, double value);

    /// Sum of weights over the edges of g.
    double energy(const Graph& g) const;

    friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> w_;
};

/// Non-negative rational in lowest terms; exact comparison of clustering metrics.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Rational make(std::uint64_t num, std::uint64_t den);
    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num == b.num && a.den == b.den;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        return a.num * b.den <=> b.num * a.den;
    }
};

/// g with the induced subgraph on N(v) complemented.
Graph local_complement(const Graph& g, Vertex v);

/// Apply local complementations in sequence order.
Graph apply_lc_sequence(const Graph& g, std::span<const Vertex> sequence);

/// Edges among neighbours of v over d(d-1)/2; zero when deg(v) <= 1.
Rational clustering_coefficient_exact(const Graph& g, Vertex v);
double clustering_coefficient(const Graph& g, Vertex v);

/// Clustering coefficient times degree, i.e. 2 e_N(v) / (d - 1); zero when d <= 1.
Rational clustering_degree_metric(const Graph& g, Vertex v);

/// Upper-triangle bit-string, row-major over pairs i < j ('0'/'1').
std::string adjacency_bit_string(const Graph& g);

/// Compact labelled key for graphs with at most kMaxKeyVertices vertices.
///
/// Pair (i, j), i < j, occupies position t of the row-major upper triangle and
/// is stored so that comparing keys compares the bit-strings lexicographically.
struct AdjacencyKey {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;

    friend auto operator<=>(const AdjacencyKey&, const AdjacencyKey&) = default;
};

inline constexpr std::size_t kMaxKeyVertices = 16;

AdjacencyKey adjacency_key(const Graph& g);
Graph graph_from_key(const AdjacencyKey& key, std::size_t n);

struct AdjacencyKeyHash {
    std::size_t operator()(const AdjacencyKey& k) const noexcept;
};

}  // namespace edgemin
