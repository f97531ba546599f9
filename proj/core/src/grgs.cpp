#include "edgemin/grgs.hpp"

#include <sstream>
#include <stdexcept>

#include "edgemin/graph_io.hpp"
#include "json.hpp"

namespace edgemin {

Grgs build_grgs(const Graph& central, std::span<const std::size_t> leaves_per_vertex) {
    const std::size_t n = central.size();
    if (leaves_per_vertex.size() != n) throw std::invalid_argument("need one leaf count per central vertex");
    Grgs g;
    g.central = central;
    g.leaves_per_vertex.assign(leaves_per_vertex.begin(), leaves_per_vertex.end());
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t k = 0; k < leaves_per_vertex[v]; ++k) g.leaf_owner.push_back(v);
    g.full = Graph(n + g.leaf_owner.size());
    for (const auto& [a, b] : central.edges()) g.full.add_edge(a, b);
    for (std::size_t k = 0; k < g.leaf_owner.size(); ++k) g.full.add_edge(g.leaf_owner[k], n + k);
    return g;
}

Grgs build_grgs(const Graph& central, std::size_t leaves_each) {
    const std::vector<std::size_t> counts(central.size(), leaves_each);
    return build_grgs(central, counts);
}

Grgs build_rgs(std::size_t m) {
    if (m < 1) throw std::invalid_argument("build_rgs needs m >= 1");
    return build_grgs(Graph::complete(2 * m), 1);
}

Grgs replace_central(const Grgs& g, const Graph& central) {
    if (central.size() != g.central.size()) throw std::invalid_argument("central graphs differ in size");
    return build_grgs(central, g.leaves_per_vertex);
}

std::string grgs_to_json(const Grgs& g) {
    nlohmann::json j;
    j["central"] = nlohmann::json::parse(graph_to_json(g.central));
    j["leaves"] = g.leaves_per_vertex;
    return j.dump();
}

Grgs grgs_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("gRGS JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("central")) throw ParseError("gRGS JSON: missing \"central\"");
    const Graph central = graph_from_json(j["central"].dump());
    std::vector<std::size_t> leaves(central.size(), 1);
    if (j.contains("leaves")) {
        const auto& l = j["leaves"];
        if (!l.is_array() || l.size() != central.size()) throw ParseError("gRGS JSON: need one leaf count per vertex");
        for (std::size_t k = 0; k < l.size(); ++k) {
            if (!l[k].is_number_unsigned()) throw ParseError("gRGS JSON: leaf counts must be non-negative integers");
            leaves[k] = l[k].get<std::size_t>();
        }
    }
    return build_grgs(central, leaves);
}

const char* gate_label(LocalGate g) noexcept {
    switch (g) {
        case LocalGate::I: return "I";
        case LocalGate::S: return "S";
        case LocalGate::H: return "H";
        case LocalGate::HSH: return "HSH";
        case LocalGate::SH: return "SH";
        case LocalGate::HS: return "HS";
    }
    return "?";
}

std::array<std::uint8_t, 4> gate_matrix(LocalGate g) noexcept {
    switch (g) {
        case LocalGate::I: return {1, 0, 0, 1};
        case LocalGate::S: return {1, 1, 0, 1};
        case LocalGate::H: return {0, 1, 1, 0};
        case LocalGate::HSH: return {1, 0, 1, 1};
        case LocalGate::SH: return {1, 1, 1, 0};
        case LocalGate::HS: return {0, 1, 1, 1};
    }
    return {1, 0, 0, 1};
}

LocalGate compose(LocalGate first, LocalGate then) noexcept {
    const auto a = gate_matrix(then);
    const auto b = gate_matrix(first);
    const std::array<std::uint8_t, 4> m = {
        static_cast<std::uint8_t>((a[0] & b[0]) ^ (a[1] & b[2])), static_cast<std::uint8_t>((a[0] & b[1]) ^ (a[1] & b[3])),
        static_cast<std::uint8_t>((a[2] & b[0]) ^ (a[3] & b[2])), static_cast<std::uint8_t>((a[2] & b[1]) ^ (a[3] & b[3]))};
    for (auto g : {LocalGate::I, LocalGate::S, LocalGate::H, LocalGate::HSH, LocalGate::SH, LocalGate::HS})
        if (gate_matrix(g) == m) return g;
    return LocalGate::I;  // unreachable: the product of invertible matrices is invertible
}

SymplecticWitness CliffordWord::witness() const {
    SymplecticWitness w;
    for (LocalGate g : gates) {
        const auto m = gate_matrix(g);
        w.p.push_back(m[0]);
        w.q.push_back(m[1]);
        w.r.push_back(m[2]);
        w.s.push_back(m[3]);
    }
    return w;
}

std::string CliffordWord::to_string() const {
    std::string out;
    for (std::size_t q = 0; q < gates.size(); ++q) {
        if (gates[q] == LocalGate::I) continue;
        if (!out.empty()) out += ' ';
        out += std::to_string(q) + ":" + gate_label(gates[q]);
    }
    return out;
}

CliffordWord word_from_sequence(const Graph& g, std::span<const Vertex> sequence, std::size_t qubits) {
    if (qubits < g.size()) throw std::invalid_argument("word needs at least one qubit per vertex");
    CliffordWord w;
    w.gates.assign(qubits, LocalGate::I);
    Graph cur = g;
    for (Vertex v : sequence) {
        w.gates[v] = compose(w.gates[v], LocalGate::HSH);
        ++w.raw_gate_count;
        for (Vertex u : cur.neighbors(v)) {
            w.gates[u] = compose(w.gates[u], LocalGate::S);
            ++w.raw_gate_count;
        }
        cur.local_complement_in_place(v);
    }
    return w;
}

StabilizerTableau leaves_after_word(const Grgs& h, const CliffordWord& word) {
    const std::size_t n = h.central.size();
    const std::size_t total = h.full.size();
    if (word.gates.size() < n) throw std::invalid_argument("word is shorter than the central graph");

    // Central qubits carry M [A_H; I]; leaves start in |+>, stabilised by X.
    const StabilizerTableau core = apply_witness(h.central, [&] {
        CliffordWord c{std::vector<LocalGate>(word.gates.begin(), word.gates.begin() + static_cast<std::ptrdiff_t>(n)), 0};
        return c.witness();
    }());
    StabilizerTableau t{Gf2Matrix(total, total), Gf2Matrix(total, total)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < n; ++c) {
            if (core.z_block.get(i, c)) t.z_block.set(i, c, true);
            if (core.x_block.get(i, c)) t.x_block.set(i, c, true);
        }
    }
    for (std::size_t k = n; k < total; ++k) t.x_block.set(k, k, true);

    // CZ(a, b) maps z_a += x_b and z_b += x_a in every generator.
    for (std::size_t k = 0; k < h.leaf_count(); ++k) {
        const std::size_t a = h.leaf_owner[k];
        const std::size_t b = n + k;
        for (std::size_t c = 0; c < total; ++c) {
            const bool xa = t.x_block.get(a, c);
            const bool xb = t.x_block.get(b, c);
            if (xb) t.z_block.flip(a, c);
            if (xa) t.z_block.flip(b, c);
        }
    }
    return t;
}

CommuteLcPlan commute_lc_plan(const Grgs& grgs, const SaConfig& cfg) {
    CommuteLcPlan plan;
    plan.target = grgs;
    plan.sa = edm_sa(grgs.central, cfg);
    plan.reduced = replace_central(grgs, plan.sa.best_graph);
    // Complementation is an involution, so the reversed sequence undoes it.
    plan.sequence.assign(plan.sa.lc_sequence.rbegin(), plan.sa.lc_sequence.rend());
    plan.word = word_from_sequence(plan.reduced.central, plan.sequence, grgs.full.size());

    const StabilizerTableau want = graph_tableau(grgs.full);
    plan.verified = same_stabilizer_state(leaves_after_word(plan.reduced, plan.word), want);
    plan.word_maps_full_graph = same_stabilizer_state(apply_witness(plan.reduced.full, plan.word.witness()), want);
    if (!plan.verified) throw VerificationFailure("Clifford word does not reproduce the target gRGS");
    return plan;
}

ProtocolComparison compare_protocols(const Grgs& grgs, std::span<const double> p_grid, const SaConfig& cfg,
                                     double photons_per_ghz) {
    ProtocolComparison out;
    out.plan = commute_lc_plan(grgs, cfg);
    for (double p : p_grid) {
        const FusionPlan naive = fusion_plan(grgs.full, p);
        const FusionPlan commute = fusion_plan(out.plan.reduced.full, p);
        out.rows.push_back({p, naive.expected_resources() * photons_per_ghz,
                            commute.expected_resources() * photons_per_ghz, naive.expected_fusions(),
                            commute.expected_fusions()});
    }
    return out;
}

std::string protocol_csv(std::span<const ProtocolRow> rows) {
    std::ostringstream ss;
    ss.precision(10);
    ss << kProtocolCsvHeader << '\n';
    for (const auto& r : rows)
        ss << r.p << ',' << r.naive_resources << ',' << r.commute_resources << ',' << r.naive_fusions << ','
           << r.commute_fusions << ',' << r.ratio() << '\n';
    return ss.str();
}

}  // namespace edgemin
