#include <gtest/gtest.h>

#include <set>

#include "edgemin/annealing.hpp"
#include "edgemin/generators.hpp"
#include "edgemin/orbit.hpp"
#include "edgemin/symplectic.hpp"

using namespace edgemin;

TEST(Temperature, Schedule) {
    EXPECT_DOUBLE_EQ(temperature(1, 100), 100.0);
    EXPECT_DOUBLE_EQ(temperature(3, 100), 50.0);
    EXPECT_DOUBLE_EQ(temperature(15, 50), 12.5);
    EXPECT_THROW(temperature(0, 100), std::invalid_argument);
}

TEST(Candidates, SymmetricGraphs) {
    for (std::size_t k : {1, 50, 100}) {
        EXPECT_EQ(candidate_vertices(Graph::complete(4), k, 100, 1), (std::vector<Vertex>{0, 1, 2, 3}));
        EXPECT_EQ(candidate_vertices(Graph::star(4), k, 100, 1), (std::vector<Vertex>{0, 1, 2, 3}));
    }
}

TEST(Candidates, TriangleWithPendant) {
    // M = clustering * degree: vertex 0 -> 1, vertices 1, 2 -> 2, leaf -> 0.
    const std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}, {0, 3}};
    const Graph g = Graph::from_edges(4, e);
    // Three distinct values; k / k_max = 1/2 puts the cutoff at position 1.
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        EXPECT_EQ(candidate_vertices(g, 50, 100, seed), (std::vector<Vertex>{1, 2}));
    // Early on either value above the smallest may be drawn.
    std::set<std::vector<Vertex>> early;
    for (std::uint64_t seed = 0; seed < 40; ++seed) early.insert(candidate_vertices(g, 1, 100, seed));
    EXPECT_EQ(early, (std::set<std::vector<Vertex>>{{0}, {1, 2}}));
    // Nothing lies above the cutoff at the end: fall back to the maximum.
    EXPECT_EQ(candidate_vertices(g, 100, 100, 0), (std::vector<Vertex>{1, 2}));
}

TEST(Candidates, Validation) {
    EXPECT_THROW(candidate_vertices(Graph(0), 1, 10, 0), std::invalid_argument);
    EXPECT_THROW(candidate_vertices(Graph::complete(3), 0, 10, 0), std::invalid_argument);
    EXPECT_THROW(candidate_vertices(Graph::complete(3), 11, 10, 0), std::invalid_argument);
}

TEST(EnergyDelta, MatchesRecount) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = erdos_renyi(20, 0.5, seed);
        WeightMatrix w(20);
        Rng rng(seed);
        for (Vertex i = 0; i < 20; ++i)
            for (Vertex j = i + 1; j < 20; ++j) w.set(i, j, static_cast<double>(rng.between(-3, 3)));
        for (Vertex v = 0; v < 20; ++v) {
            const Graph h = local_complement(g, v);
            EXPECT_DOUBLE_EQ(lc_energy_delta(g, v, nullptr),
                             static_cast<double>(h.edge_count()) - static_cast<double>(g.edge_count()));
            EXPECT_DOUBLE_EQ(lc_energy_delta(g, v, &w), w.energy(h) - w.energy(g));
        }
    }
}

TEST(EdmSa, CompleteGraphReachesStar) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SaConfig cfg;
        cfg.seed = seed;
        const auto res = edm_sa(Graph::complete(6), cfg);
        EXPECT_EQ(res.best_energy, 5.0) << seed;
        EXPECT_EQ(exact_mer(Graph::complete(6)).graph.edge_count(), 5u);
    }
}

TEST(EdmSa, MerInputStays) {
    SaConfig cfg;
    const auto res = edm_sa(Graph::cycle(5), cfg);
    EXPECT_EQ(res.best_energy, 5.0);
}

TEST(EdmSa, ResultInvariants) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const Graph g = erdos_renyi(14, 0.5, seed);
        SaConfig cfg;
        cfg.seed = seed;
        cfg.k_max = 200;
        const auto res = edm_sa(g, cfg);
        EXPECT_EQ(apply_lc_sequence(g, res.lc_sequence), res.best_graph);
        EXPECT_EQ(res.best_energy, static_cast<double>(res.best_graph.edge_count()));
        EXPECT_LE(res.best_energy, static_cast<double>(g.edge_count()));
        ASSERT_EQ(res.energy_trace.size(), cfg.k_max);
        for (double e : res.energy_trace) EXPECT_LE(res.best_energy, e);
        EXPECT_TRUE(lc_equivalent(res.best_graph, g).has_value());
        const auto again = edm_sa(g, cfg);
        EXPECT_EQ(again.best_graph, res.best_graph);
        EXPECT_EQ(again.lc_sequence, res.lc_sequence);
        EXPECT_EQ(again.energy_trace, res.energy_trace);
    }
}

TEST(EdmSa, WeightedEnergy) {
    const Graph g = erdos_renyi(10, 0.5, 4);
    WeightMatrix w(10);
    for (Vertex i = 0; i < 10; ++i)
        for (Vertex j = i + 1; j < 10; ++j) w.set(i, j, (i + j) % 3 == 0 ? -1.0 : 1.0);
    SaConfig cfg;
    cfg.weights = w;
    const auto res = edm_sa(g, cfg);
    EXPECT_DOUBLE_EQ(res.best_energy, w.energy(res.best_graph));
    EXPECT_LE(res.best_energy, w.energy(g));
    EXPECT_EQ(apply_lc_sequence(g, res.lc_sequence), res.best_graph);
}

TEST(EdmSa, ConfigValidation) {
    SaConfig cfg;
    cfg.k_max = 0;
    EXPECT_THROW(edm_sa(Graph::complete(3), cfg), std::invalid_argument);
    cfg.k_max = 10;
    cfg.t1 = 0;
    EXPECT_THROW(edm_sa(Graph::complete(3), cfg), std::invalid_argument);
    cfg.t1 = 1;
    cfg.weights = WeightMatrix(4);
    EXPECT_THROW(edm_sa(Graph::complete(3), cfg), std::invalid_argument);
}
