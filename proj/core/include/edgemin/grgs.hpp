#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "edgemin/annealing.hpp"
#include "edgemin/fusion.hpp"
#include "edgemin/graph.hpp"
#include "edgemin/symplectic.hpp"

namespace edgemin {

/// Central graph with pendant leaves. Leaves are numbered after the central
/// vertices, grouped by the central vertex they hang from.
struct Grgs {
    Graph central;
    std::vector<std::size_t> leaves_per_vertex;
    Graph full;
    /// leaf_owner[k] is the central vertex of full vertex central.size() + k.
    std::vector<Vertex> leaf_owner;

    std::size_t leaf_count() const noexcept { return leaf_owner.size(); }
};

/// Complete core K_{2m} with one leaf per core vertex.
Grgs build_rgs(std::size_t m);
Grgs build_grgs(const Graph& central, std::span<const std::size_t> leaves_per_vertex);
Grgs build_grgs(const Graph& central, std::size_t leaves_each);

/// Same leaves attached to a different central graph on the same vertices.
Grgs replace_central(const Grgs& g, const Graph& central);

std::string grgs_to_json(const Grgs& g);
Grgs grgs_from_json(std::string_view text);

/// Element of the single-qubit Clifford group modulo Paulis, acting on the
/// (z, x) coordinates of one qubit as an invertible 2x2 binary matrix.
/// Labels are operator products: SH means H first, then S.
enum class LocalGate : std::uint8_t { I, S, H, HSH, SH, HS };

const char* gate_label(LocalGate g) noexcept;
/// Row-major [[a, b], [c, d]] with z' = a z + b x, x' = c z + d x.
std::array<std::uint8_t, 4> gate_matrix(LocalGate g) noexcept;
/// Gate equal to applying `first`, then `then`.
LocalGate compose(LocalGate first, LocalGate then) noexcept;

/// Per-qubit local Clifford circuit, reduced to one group element per qubit.
struct CliffordWord {
    std::vector<LocalGate> gates;
    /// Elementary gates emitted before reduction.
    std::size_t raw_gate_count = 0;

    /// The witness form used by apply_witness.
    SymplecticWitness witness() const;
    std::string to_string() const;
};

/// Word realising `sequence` on g: complementing at v applies HSH to v and S
/// to each current neighbour of v, in sequence order. Only the vertices of g
/// are considered, so leaves of a gRGS receive no gates.
CliffordWord word_from_sequence(const Graph& g, std::span<const Vertex> sequence, std::size_t qubits);

/// Tableau of (word on central qubits) applied to H with every leaf in |+>,
/// followed by CZ between each leaf and its central vertex.
StabilizerTableau leaves_after_word(const Grgs& h_plus_leaves, const CliffordWord& word);

struct CommuteLcPlan {
    SaResult sa;
    Grgs target;       ///< G + L
    Grgs reduced;      ///< H + L
    std::vector<Vertex> sequence;  ///< complementations taking H to G
    CliffordWord word;
    /// CZ_L (word (x) I) |H>|+>^L has the stabilizer group of G + L.
    bool verified = false;
    /// word applied to the graph state of H + L has the stabilizer group of G + L.
    bool word_maps_full_graph = false;
};

class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Anneals the central graph, reverses the sequence and builds the word.
/// Throws VerificationFailure when `verified` does not hold.
CommuteLcPlan commute_lc_plan(const Grgs& grgs, const SaConfig& cfg);

struct ProtocolRow {
    double p = 1.0;
    double naive_resources = 0.0;
    double commute_resources = 0.0;
    double naive_fusions = 0.0;
    double commute_fusions = 0.0;
    double ratio() const { return naive_resources / commute_resources; }
};

struct ProtocolComparison {
    CommuteLcPlan plan;
    std::vector<ProtocolRow> rows;
};

/// Fusion plans for G + L (naive) and H + L (Commute-LC) at each p. Resource
/// counts are multiplied by photons_per_ghz.
ProtocolComparison compare_protocols(const Grgs& grgs, std::span<const double> p_grid, const SaConfig& cfg,
                                     double photons_per_ghz = 1.0);

inline constexpr const char* kProtocolCsvHeader = "p,naive_resources,commute_resources,naive_fusions,commute_fusions,ratio";

std::string protocol_csv(std::span<const ProtocolRow> rows);

}  // namespace edgemin
