#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgemin/gf2_matrix.hpp"
#include "edgemin/graph.hpp"

namespace edgemin {

/// Diagonals of the four blocks of a local symplectic map.
///
/// Qubit i transforms its (z, x) coordinates by the 2x2 matrix
/// [[p_i, q_i], [r_i, s_i]], so a valid witness has p_i s_i + q_i r_i = 1.
struct SymplecticWitness {
    std::vector<std::uint8_t> p, q, r, s;

    static SymplecticWitness identity(std::size_t n);

    std::size_t size() const noexcept { return p.size(); }
    bool satisfies_quadratic() const noexcept;

    friend bool operator==(const SymplecticWitness&, const SymplecticWitness&) = default;
};

/// Stabilizer generators as the columns of the 2n x n matrix [z_block; x_block].
///
/// The graph state of g has z_block = A_g and x_block = I: generator v is
/// X_v times Z on N(v). Signs are not tracked.
struct StabilizerTableau {
    Gf2Matrix z_block;
    Gf2Matrix x_block;

    std::size_t size() const noexcept { return z_block.cols(); }
    /// [z_block; x_block]
    Gf2Matrix stacked() const { return z_block.stack(x_block); }
};

/// Coefficient matrix of the linear conditions on (p, q, r, s) for a local
/// symplectic map taking the graph state of `source` to that of `target`.
///
/// Row i*n + j encodes entry (i, j) of
///     P A_s + Q + A_t R A_s + A_t S = 0,
/// which is [A_t I] Omega M [A_s; I] = 0 written out for diagonal blocks.
/// Columns are ordered p_0..p_{n-1}, q_0.., r_0.., s_0...
Gf2Matrix bouchet_system(const Graph& target, const Graph& source);

/// True when w solves bouchet_system(target, source).
bool satisfies_linear_system(const Graph& target, const Graph& source, const SymplecticWitness& w);

/// Witness that maps the graph state of `source` onto that of `target`, or
/// nullopt when they are not LC-equivalent. Searches the solution space of the
/// linear system qubit by qubit over the six valid local blocks, pruning any
/// branch that leaves some later qubit without a consistent block.
std::optional<SymplecticWitness> lc_equivalent(const Graph& target, const Graph& source);

/// 2n x 2n matrix of the witness in (z; x) coordinates.
Gf2Matrix witness_matrix(const SymplecticWitness& w);

/// M^T Omega M == Omega with Omega = [[0, I], [I, 0]].
bool is_symplectic(const Gf2Matrix& m);

StabilizerTableau graph_tableau(const Graph& g);

/// Columns M [A_g; I] for the map M encoded by w. Throws if w is not valid.
StabilizerTableau apply_witness(const Graph& g, const SymplecticWitness& w);

/// Graph with adjacency z_block * x_block^-1, if x_block is invertible and the
/// product is a valid adjacency matrix. Throws on a non-commuting or
/// rank-deficient tableau.
std::optional<Graph> tableau_to_graph(const StabilizerTableau& t);

/// Generators pairwise commute and are independent.
bool is_valid_tableau(const StabilizerTableau& t);

/// Column spaces coincide (sign-free).
bool same_stabilizer_state(const StabilizerTableau& a, const StabilizerTableau& b);

std::string witness_to_json(const SymplecticWitness& w);
SymplecticWitness witness_from_json(std::string_view text);

}  // namespace edgemin
