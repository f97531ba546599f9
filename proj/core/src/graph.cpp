#include "edgemin/graph.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "edgemin/rng.hpp"

namespace edgemin {

Graph::Graph(std::size_t n) : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {}

void Graph::check_vertex(Vertex v) const {
    if (v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of size " +
                                std::to_string(n_));
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::from_adjacency(const Gf2Matrix& adjacency) {
    const std::size_t n = adjacency.rows();
    if (adjacency.cols() != n) throw std::invalid_argument("adjacency matrix must be square");
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (adjacency.get(i, i)) throw std::invalid_argument("adjacency matrix has a non-zero diagonal");
        for (std::size_t j = i + 1; j < n; ++j) {
            if (adjacency.get(i, j) != adjacency.get(j, i))
                throw std::invalid_argument("adjacency matrix is not symmetric");
            if (adjacency.get(i, j)) g.add_edge(i, j);
        }
    }
    return g;
}

Graph Graph::complete(std::size_t n) {
    Graph g(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph Graph::path(std::size_t n) {
    Graph g(n);
    for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph Graph::cycle(std::size_t n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::star(std::size_t n) {
    Graph g(n);
    for (Vertex i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    bits_[u * words_ + v / kWordBits] |= Word{1} << (v % kWordBits);
    bits_[v * words_ + u / kWordBits] |= Word{1} << (u % kWordBits);
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    bits_[u * words_ + v / kWordBits] &= ~(Word{1} << (v % kWordBits));
    bits_[v * words_ + u / kWordBits] &= ~(Word{1} << (u % kWordBits));
}

void Graph::toggle_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    bits_[u * words_ + v / kWordBits] ^= Word{1} << (v % kWordBits);
    bits_[v * words_ + u / kWordBits] ^= Word{1} << (u % kWordBits);
}

std::size_t Graph::degree(Vertex v) const noexcept {
    std::size_t d = 0;
    for (Word w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

std::size_t Graph::edge_count() const noexcept {
    std::size_t total = 0;
    for (Word w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total / 2;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    const auto r = row(v);
    for (std::size_t w = 0; w < words_; ++w) {
        Word bits = r[w];
        while (bits) {
            out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex i = 0; i < n_; ++i)
        for (Vertex j : neighbors(i))
            if (i < j) out.emplace_back(i, j);
    return out;
}

std::size_t Graph::neighbourhood_edges(Vertex v) const noexcept {
    const Word* nv = bits_.data() + v * words_;
    std::size_t twice = 0;
    for (std::size_t w = 0; w < words_; ++w) {
        Word bits = nv[w];
        while (bits) {
            const std::size_t u = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
            const Word* nu = bits_.data() + u * words_;
            for (std::size_t x = 0; x < words_; ++x)
                twice += static_cast<std::size_t>(std::popcount(nu[x] & nv[x]));
            bits &= bits - 1;
        }
    }
    return twice / 2;
}

void Graph::local_complement_in_place(Vertex v) {
    check_vertex(v);
    const Word* nv = bits_.data() + v * words_;
    for (std::size_t w = 0; w < words_; ++w) {
        Word bits = nv[w];
        while (bits) {
            const std::size_t u = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
            Word* nu = bits_.data() + u * words_;
            for (std::size_t x = 0; x < words_; ++x) nu[x] ^= nv[x];
            // u is in N(v), so the XOR set the diagonal bit; clear it again.
            nu[u / kWordBits] ^= Word{1} << (u % kWordBits);
            bits &= bits - 1;
        }
    }
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    Graph h(vertices.size());
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        check_vertex(vertices[a]);
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (has_edge(vertices[a], vertices[b])) h.add_edge(a, b);
    }
    return h;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<Word> seen(words_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        const auto r = row(v);
        for (std::size_t w = 0; w < words_; ++w) {
            Word fresh = r[w] & ~seen[w];
            seen[w] |= fresh;
            while (fresh) {
                stack.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(fresh)));
                ++reached;
                fresh &= fresh - 1;
            }
        }
    }
    return reached == n_;
}

Gf2Matrix Graph::adjacency() const {
    Gf2Matrix m(n_, n_);
    for (Vertex i = 0; i < n_; ++i)
        for (Vertex j : neighbors(i)) m.set(i, j, true);
    return m;
}

void WeightMatrix::set(Vertex i, Vertex j, double value) {
    if (i >= n_ || j >= n_) throw std::out_of_range("weight index out of range");
    if (i == j) throw std::invalid_argument("diagonal weights are fixed at zero");
    w_[i * n_ + j] = value;
    w_[j * n_ + i] = value;
}

double WeightMatrix::energy(const Graph& g) const {
    if (g.size() != n_) throw std::invalid_argument("weight matrix size does not match graph");
    double e = 0.0;
    for (const auto& [i, j] : g.edges()) e += at(i, j);
    return e;
}

Rational Rational::make(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (num == 0) return {0, 1};
    const std::uint64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

Graph local_complement(const Graph& g, Vertex v) {
    Graph out = g;
    out.local_complement_in_place(v);
    return out;
}

Graph apply_lc_sequence(const Graph& g, std::span<const Vertex> sequence) {
    Graph out = g;
    for (Vertex v : sequence) out.local_complement_in_place(v);
    return out;
}

Rational clustering_coefficient_exact(const Graph& g, Vertex v) {
    if (v >= g.size()) throw std::out_of_range("vertex out of range");
    const std::uint64_t d = g.degree(v);
    if (d <= 1) return {0, 1};
    return Rational::make(2 * g.neighbourhood_edges(v), d * (d - 1));
}

double clustering_coefficient(const Graph& g, Vertex v) {
    return clustering_coefficient_exact(g, v).value();
}

Rational clustering_degree_metric(const Graph& g, Vertex v) {
    if (v >= g.size()) throw std::out_of_range("vertex out of range");
    const std::uint64_t d = g.degree(v);
    if (d <= 1) return {0, 1};
    return Rational::make(2 * g.neighbourhood_edges(v), d - 1);
}

std::string adjacency_bit_string(const Graph& g) {
    std::string s;
    const std::size_t n = g.size();
    s.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) s.push_back(g.has_edge(i, j) ? '1' : '0');
    return s;
}

AdjacencyKey adjacency_key(const Graph& g) {
    const std::size_t n = g.size();
    if (n > kMaxKeyVertices)
        throw std::invalid_argument("adjacency keys support at most " + std::to_string(kMaxKeyVertices) +
                                    " vertices");
    AdjacencyKey key;
    std::size_t t = 0;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j, ++t) {
            if (!g.has_edge(i, j)) continue;
            if (t < 64)
                key.hi |= std::uint64_t{1} << (63 - t);
            else
                key.lo |= std::uint64_t{1} << (127 - t);
        }
    }
    return key;
}

Graph graph_from_key(const AdjacencyKey& key, std::size_t n) {
    if (n > kMaxKeyVertices) throw std::invalid_argument("key graph too large");
    Graph g(n);
    std::size_t t = 0;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j, ++t) {
            const bool bit = t < 64 ? (key.hi >> (63 - t)) & 1U : (key.lo >> (127 - t)) & 1U;
            if (bit) g.add_edge(i, j);
        }
    }
    return g;
}

std::size_t AdjacencyKeyHash::operator()(const AdjacencyKey& k) const noexcept {
    return static_cast<std::size_t>(mix_seed(k.hi, k.lo));
}

}  // namespace edgemin
