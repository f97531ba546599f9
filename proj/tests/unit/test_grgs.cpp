#include <gtest/gtest.h>

#include "edgemin/fusion.hpp"
#include "edgemin/generators.hpp"
#include "edgemin/grgs.hpp"
#include "edgemin/orbit.hpp"

using namespace edgemin;

TEST(Grgs, Construction) {
    const auto rgs = build_rgs(2);
    EXPECT_EQ(rgs.full.size(), 8u);
    EXPECT_EQ(rgs.full.edge_count(), 10u);
    EXPECT_EQ(rgs.leaf_count(), 4u);
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_EQ(rgs.leaf_owner[k], k);
        EXPECT_TRUE(rgs.full.has_edge(k, 4 + k));
        EXPECT_EQ(rgs.full.degree(4 + k), 1u);
    }

    const Graph central = erdos_renyi(18, 0.3, 5);
    const auto g = build_grgs(central, 1);
    EXPECT_EQ(g.full.size(), 36u);
    EXPECT_EQ(g.full.edge_count(), central.edge_count() + 18);

    const std::vector<std::size_t> counts{0, 2, 1};
    const auto uneven = build_grgs(Graph::path(3), counts);
    EXPECT_EQ(uneven.full.size(), 6u);
    EXPECT_EQ(uneven.leaf_owner, (std::vector<Vertex>{1, 1, 2}));
    EXPECT_THROW(build_grgs(Graph::path(3), std::vector<std::size_t>{1, 1}), std::invalid_argument);

    const auto swapped = replace_central(g, Graph(18));
    EXPECT_EQ(swapped.full.edge_count(), 18u);
    EXPECT_EQ(grgs_from_json(grgs_to_json(uneven)).full, uneven.full);
}

TEST(LocalGates, GroupStructure) {
    const LocalGate all[] = {LocalGate::I, LocalGate::S, LocalGate::H, LocalGate::HSH, LocalGate::SH, LocalGate::HS};
    for (LocalGate a : all) {
        const auto m = gate_matrix(a);
        EXPECT_EQ((m[0] * m[3] + m[1] * m[2]) % 2, 1) << gate_label(a);
        EXPECT_EQ(compose(LocalGate::I, a), a);
        EXPECT_EQ(compose(a, LocalGate::I), a);
        for (LocalGate b : all) {
            // compose(a, b) is b after a: matrix product M_b M_a.
            const auto ma = gate_matrix(a);
            const auto mb = gate_matrix(b);
            const auto mc = gate_matrix(compose(a, b));
            EXPECT_EQ(mc[0], (mb[0] * ma[0] + mb[1] * ma[2]) % 2);
            EXPECT_EQ(mc[1], (mb[0] * ma[1] + mb[1] * ma[3]) % 2);
            EXPECT_EQ(mc[2], (mb[2] * ma[0] + mb[3] * ma[2]) % 2);
            EXPECT_EQ(mc[3], (mb[2] * ma[1] + mb[3] * ma[3]) % 2);
        }
    }
    EXPECT_EQ(compose(LocalGate::H, LocalGate::S), LocalGate::SH);
    EXPECT_EQ(compose(LocalGate::S, LocalGate::H), LocalGate::HS);
    EXPECT_EQ(compose(LocalGate::S, LocalGate::S), LocalGate::I);
}

TEST(CliffordWord, RealisesSequenceOnCentralGraph) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph h = erdos_renyi(7, 0.5, seed);
        Rng rng(seed);
        std::vector<Vertex> seq;
        for (int t = 0; t < 5; ++t) seq.push_back(rng.below(7));
        const Graph g = apply_lc_sequence(h, seq);
        const auto word = word_from_sequence(h, seq, 7);
        EXPECT_TRUE(word.witness().satisfies_quadratic());
        EXPECT_TRUE(same_stabilizer_state(apply_witness(h, word.witness()), graph_tableau(g)));
        EXPECT_GE(word.raw_gate_count, seq.size());
    }
}

TEST(CommuteLc, CompleteCore) {
    SaConfig cfg;
    cfg.seed = 1;
    const auto plan = commute_lc_plan(build_rgs(2), cfg);
    EXPECT_TRUE(plan.verified);
    EXPECT_EQ(plan.reduced.central.edge_count(), 3u);
    EXPECT_EQ(apply_lc_sequence(plan.reduced.central, plan.sequence), plan.target.central);
    // Complementing a K4 vertex with leaves attached also changes leaf edges,
    // so the word alone does not carry H + L to G + L.
    EXPECT_FALSE(plan.word_maps_full_graph);
    EXPECT_FALSE(enumerate_orbit(plan.target.full).contains(plan.reduced.full));
}

TEST(CommuteLc, TreeCoreNeedsNoGates) {
    SaConfig cfg;
    const auto plan = commute_lc_plan(build_grgs(Graph::path(6), 1), cfg);
    EXPECT_TRUE(plan.verified);
    EXPECT_TRUE(plan.sequence.empty());
    for (LocalGate gate : plan.word.gates) EXPECT_EQ(gate, LocalGate::I);
    EXPECT_TRUE(plan.word_maps_full_graph);
}

TEST(CommuteLc, RandomCoresVerify) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        SaConfig cfg;
        cfg.seed = seed;
        const auto plan = commute_lc_plan(build_grgs(erdos_renyi(10, 0.6, seed), 1), cfg);
        EXPECT_TRUE(plan.verified);
        EXPECT_LE(plan.reduced.full.edge_count(), plan.target.full.edge_count());
    }
}

TEST(Fusion, SingleEdge) {
    const auto half = fusion_plan(Graph::complete(2), 0.5);
    EXPECT_EQ(half.ghz3_count, 2u);
    EXPECT_EQ(half.fusion_count, 1u);
    EXPECT_DOUBLE_EQ(half.expected_resources(), 4.0);
    EXPECT_DOUBLE_EQ(half.expected_fusions(), 2.0);
    EXPECT_THROW(fusion_plan(Graph::complete(2), 0.0), std::invalid_argument);
    EXPECT_THROW(fusion_plan(Graph::complete(2), 1.5), std::invalid_argument);
}

TEST(Fusion, DeterministicCounts) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = erdos_renyi(12, 0.4, seed);
        const auto plan = fusion_plan(g, 1.0);
        std::size_t leaves = 0;
        for (Vertex v = 0; v < g.size(); ++v) leaves += std::max<std::size_t>(1, g.degree(v) > 1 ? g.degree(v) - 1 : 1);
        EXPECT_EQ(plan.ghz3_count, leaves);
        EXPECT_DOUBLE_EQ(plan.expected_resources(), static_cast<double>(leaves));
        EXPECT_DOUBLE_EQ(plan.expected_fusions(), static_cast<double>(plan.fusion_count));
    }
}

TEST(Fusion, CostFallsWithSuccessProbability) {
    const Graph g = erdos_renyi(10, 0.5, 3);
    double prev = 1e300;
    for (double p : {0.5, 0.6, 0.7, 0.8, 0.9, 1.0}) {
        const double r = fusion_plan(g, p).expected_resources();
        EXPECT_LT(r, prev);
        prev = r;
    }
}

TEST(Fusion, GreedyNoWorseThanSequential) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Graph g = erdos_renyi(10, 0.4, seed);
        for (double p : {0.5, 0.75}) {
            EXPECT_LE(fusion_plan(g, p, PairingRule::greedy).expected_resources(),
                      fusion_plan(g, p, PairingRule::sequential).expected_resources() * (1 + 1e-12))
                << seed << " " << p;
        }
    }
}

TEST(Protocols, CompareAndCsv) {
    SaConfig cfg;
    cfg.seed = 2;
    const std::vector<double> grid{0.5, 0.75, 1.0};
    const auto cmp = compare_protocols(build_rgs(3), grid, cfg, 3.0);
    ASSERT_EQ(cmp.rows.size(), 3u);
    for (const auto& row : cmp.rows) {
        EXPECT_GT(row.ratio(), 1.0);
        EXPECT_LT(row.commute_resources, row.naive_resources);
    }
    EXPECT_DOUBLE_EQ(cmp.rows[2].naive_resources, 3.0 * fusion_plan(build_rgs(3).full, 1.0).expected_resources());
    const auto csv = protocol_csv(cmp.rows);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), kProtocolCsvHeader);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
}
