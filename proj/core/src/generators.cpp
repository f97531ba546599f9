#include "edgemin/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "edgemin/rng.hpp"

namespace edgemin {

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
    Rng rng(seed);
    Graph g(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (rng.uniform01() < p) g.add_edge(i, j);
    return g;
}

bool is_graphical(std::span<const std::size_t> degrees) {
    std::vector<std::size_t> d(degrees.begin(), degrees.end());
    std::sort(d.begin(), d.end(), std::greater<>());
    const std::size_t n = d.size();
    std::size_t total = std::accumulate(d.begin(), d.end(), std::size_t{0});
    if (total % 2 != 0) return false;
    if (n > 0 && d[0] >= n) return false;
    std::size_t lhs = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        lhs += d[k - 1];
        std::size_t rhs = k * (k - 1);
        for (std::size_t i = k; i < n; ++i) rhs += std::min(d[i], k);
        if (lhs > rhs) return false;
    }
    return true;
}

std::optional<Graph> havel_hakimi(std::span<const std::size_t> degrees) {
    const std::size_t n = degrees.size();
    std::vector<std::size_t> residual(degrees.begin(), degrees.end());
    Graph g(n);
    std::vector<Vertex> order(n);
    for (;;) {
        std::iota(order.begin(), order.end(), Vertex{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](Vertex a, Vertex b) { return residual[a] > residual[b]; });
        const Vertex v = order[0];
        const std::size_t need = residual[v];
        if (need == 0) return g;
        if (need > n - 1) return std::nullopt;
        residual[v] = 0;
        for (std::size_t k = 1; k <= need; ++k) {
            const Vertex u = order[k];
            if (residual[u] == 0) return std::nullopt;
            --residual[u];
            g.add_edge(v, u);
        }
    }
}

namespace {

std::vector<std::size_t> component_labels(const Graph& g, std::size_t& count) {
    const std::size_t n = g.size();
    std::vector<std::size_t> label(n, n);
    count = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (label[s] != n) continue;
        std::vector<Vertex> stack{s};
        label[s] = count;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : g.neighbors(v)) {
                if (label[u] == n) {
                    label[u] = count;
                    stack.push_back(u);
                }
            }
        }
        ++count;
    }
    return label;
}

bool connected_without(const Graph& g, Vertex a, Vertex b) {
    Graph h = g;
    h.remove_edge(a, b);
    std::size_t count = 0;
    const auto label = component_labels(h, count);
    return label[a] == label[b];
}

}  // namespace

bool connect_by_swaps(Graph& g) {
    for (;;) {
        std::size_t count = 0;
        const auto label = component_labels(g, count);
        if (count <= 1) return true;

        // Find a non-bridge edge (a, b) in some component, then any edge (c, d)
        // outside it. Replacing them with (a, c), (b, d) keeps every degree and
        // strictly reduces the number of components.
        bool swapped = false;
        for (const auto& [a, b] : g.edges()) {
            if (!connected_without(g, a, b)) continue;
            for (const auto& [c, d] : g.edges()) {
                if (label[c] == label[a]) continue;
                g.remove_edge(a, b);
                g.remove_edge(c, d);
                g.add_edge(a, c);
                g.add_edge(b, d);
                swapped = true;
                break;
            }
            if (swapped) break;
        }
        if (!swapped) return false;
    }
}

Graph bounded_degree(std::size_t n, std::size_t d_lim, std::uint64_t seed, BoundedDegreeOptions opts) {
    if (n < 2) throw std::invalid_argument("bounded_degree needs n >= 2");
    if (d_lim < 1) throw std::invalid_argument("bounded_degree needs d_lim >= 1");
    const std::size_t cap = std::min(d_lim, n - 1);
    Rng rng(seed);
    std::vector<std::size_t> deg(n);
    for (std::size_t attempt = 0; attempt < opts.retry_budget; ++attempt) {
        for (auto& d : deg) d = 1 + rng.below(cap);
        std::size_t total = std::accumulate(deg.begin(), deg.end(), std::size_t{0});
        if (total % 2 != 0) {
            auto it = std::find_if(deg.begin(), deg.end(), [&](std::size_t d) { return d < cap; });
            if (it == deg.end()) it = std::find_if(deg.begin(), deg.end(), [](std::size_t d) { return d > 1; });
            if (it == deg.end()) continue;
            if (*it < cap)
                ++*it;
            else
                --*it;
            total = std::accumulate(deg.begin(), deg.end(), std::size_t{0});
        }
        if (total < 2 * (n - 1) || !is_graphical(deg)) continue;
        auto g = havel_hakimi(deg);
        if (!g || !connect_by_swaps(*g)) continue;
        return *g;
    }
    throw std::runtime_error("bounded_degree: no connected graphical sequence after " +
                             std::to_string(opts.retry_budget) + " attempts");
}

}  // namespace edgemin
