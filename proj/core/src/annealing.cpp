#include "edgemin/annealing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace edgemin {

void SaConfig::validate(std::size_t n) const {
    if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
    if (!(t1 > 0.0) || !std::isfinite(t1)) throw std::invalid_argument("t1 must be a positive finite number");
    if (weights && weights->size() != n) throw std::invalid_argument("weight matrix size does not match graph");
}

double temperature(std::size_t k, double t1) {
    if (k < 1) throw std::invalid_argument("temperature is defined for k >= 1");
    return t1 / std::log2(static_cast<double>(k) + 1.0);
}

double lc_energy_delta(const Graph& g, Vertex v, const WeightMatrix* weights) {
    if (!weights) {
        const double d = static_cast<double>(g.degree(v));
        return d * (d - 1.0) / 2.0 - 2.0 * static_cast<double>(g.neighbourhood_edges(v));
    }
    const auto nb = g.neighbors(v);
    double delta = 0.0;
    for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b)
            delta += g.has_edge(nb[a], nb[b]) ? -weights->at(nb[a], nb[b]) : weights->at(nb[a], nb[b]);
    return delta;
}

double graph_energy(const Graph& g, const WeightMatrix* weights) {
    return weights ? weights->energy(g) : static_cast<double>(g.edge_count());
}

std::vector<Vertex> candidate_vertices(const Graph& g, std::size_t k, std::size_t k_max, Rng& rng) {
    const std::size_t n = g.size();
    if (n == 0) throw std::invalid_argument("candidate_vertices needs a non-empty graph");
    if (k < 1 || k > k_max) throw std::invalid_argument("iteration index must satisfy 1 <= k <= k_max");

    std::vector<Rational> metric(n);
    for (Vertex v = 0; v < n; ++v) metric[v] = clustering_degree_metric(g, v);
    std::vector<Rational> unique = metric;
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

    const std::size_t l = unique.size();
    const std::size_t cutoff = k * l / k_max;
    Rational picked = unique.back();
    if (cutoff + 1 < l) picked = unique[cutoff + 1 + rng.below(l - cutoff - 1)];

    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (metric[v] == picked) out.push_back(v);
    return out;
}

std::vector<Vertex> candidate_vertices(const Graph& g, std::size_t k, std::size_t k_max, std::uint64_t seed) {
    Rng rng(seed);
    return candidate_vertices(g, k, k_max, rng);
}

SaResult edm_sa(const Graph& g, const SaConfig& cfg) {
    cfg.validate(g.size());
    const WeightMatrix* weights = cfg.weights ? &*cfg.weights : nullptr;

    SaResult res;
    res.best_graph = g;
    res.best_energy = graph_energy(g, weights);
    if (cfg.record_trace) res.energy_trace.reserve(cfg.k_max);
    if (g.size() == 0) {
        if (cfg.record_trace) res.energy_trace.assign(cfg.k_max, 0.0);
        return res;
    }

    Rng rng(cfg.seed);
    Graph current = g;
    double energy = res.best_energy;
    std::vector<Vertex> path;
    std::size_t best_prefix = 0;

    for (std::size_t k = 1; k <= cfg.k_max; ++k) {
        Vertex v = 0;
        if (cfg.selection == SelectionRule::guided) {
            const auto cand = candidate_vertices(current, k, cfg.k_max, rng);
            v = cand[rng.below(cand.size())];
        } else {
            v = rng.below(current.size());
        }

        const double delta = lc_energy_delta(current, v, weights);
        const bool accept = delta <= 0.0 || rng.uniform01() < std::exp(-delta / temperature(k, cfg.t1));
        if (accept) {
            ++res.accepted_moves;
            if (current.degree(v) >= 2) {
                current.local_complement_in_place(v);
                path.push_back(v);
                energy += delta;
                // Unweighted energies are integers; avoid drift from repeated sums.
                if (!weights) energy = std::round(energy);
                if (energy < res.best_energy) {
                    res.best_energy = energy;
                    res.best_graph = current;
                    best_prefix = path.size();
                }
            }
        }
        if (cfg.record_trace) res.energy_trace.push_back(energy);
    }
    res.lc_sequence.assign(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(best_prefix));
    if (weights) res.best_energy = weights->energy(res.best_graph);
    return res;
}

}  // namespace edgemin
