#include "edgemin/symplectic.hpp"

#include <array>
#include <stdexcept>

#include "edgemin/graph_io.hpp"
#include "json.hpp"

namespace edgemin {

namespace {

void require_same_size(const Graph& a, const Graph& b) {
    if (a.size() != b.size()) throw std::invalid_argument("graphs must have the same number of vertices");
}

SymplecticWitness witness_from_vector(const Gf2Matrix& v, std::size_t row, std::size_t n) {
    SymplecticWitness w;
    w.p.resize(n);
    w.q.resize(n);
    w.r.resize(n);
    w.s.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        w.p[i] = v.get(row, i);
        w.q[i] = v.get(row, n + i);
        w.r[i] = v.get(row, 2 * n + i);
        w.s[i] = v.get(row, 3 * n + i);
    }
    return w;
}

// The six (p, q, r, s) with ps + qr = 1.
constexpr std::array<std::array<std::uint8_t, 4>, 6> kLocalChoices{{
    {1, 0, 0, 1}, {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 0}, {0, 1, 1, 1}, {1, 1, 1, 0}}};

// Linear equations on null-space coefficients, kept in echelon form as they
// arrive. Bit `dim` of each row is the right-hand side.
class CoefficientSystem {
public:
    explicit CoefficientSystem(std::size_t dim) : dim_(dim) {}

    bool add(std::vector<Word> row, bool rhs) {
        if (rhs) row[dim_ / kWordBits] |= Word{1} << (dim_ % kWordBits);
        for (std::size_t k = 0; k < rows_.size(); ++k)
            if (bit(row, pivots_[k]))
                for (std::size_t w = 0; w < row.size(); ++w) row[w] ^= rows_[k][w];
        for (std::size_t c = 0; c < dim_; ++c) {
            if (bit(row, c)) {
                pivots_.push_back(c);
                rows_.push_back(std::move(row));
                return true;
            }
        }
        return !bit(row, dim_);
    }

    bool fix_qubit(const std::vector<std::vector<Word>>& form, std::size_t n, std::size_t qubit,
                   const std::array<std::uint8_t, 4>& values) {
        for (std::size_t block = 0; block < 4; ++block)
            if (!add(form[block * n + qubit], values[block] != 0)) return false;
        return true;
    }

    // Free coefficients are zero. Later rows are clear at earlier pivots, so
    // solving in reverse insertion order only reads known values.
    std::vector<std::uint8_t> solution() const {
        std::vector<std::uint8_t> c(dim_, 0);
        for (std::size_t k = rows_.size(); k-- > 0;) {
            bool acc = bit(rows_[k], dim_);
            for (std::size_t j = 0; j < dim_; ++j)
                if (j != pivots_[k] && bit(rows_[k], j) && c[j]) acc = !acc;
            c[pivots_[k]] = acc ? 1 : 0;
        }
        return c;
    }

private:
    static bool bit(const std::vector<Word>& row, std::size_t c) {
        return (row[c / kWordBits] >> (c % kWordBits)) & 1U;
    }

    std::size_t dim_;
    std::vector<std::vector<Word>> rows_;
    std::vector<std::size_t> pivots_;
};

struct SolverFrame {
    CoefficientSystem system;
    std::size_t qubit;
    std::size_t next_choice;
};

}  // namespace

SymplecticWitness SymplecticWitness::identity(std::size_t n) {
    return {std::vector<std::uint8_t>(n, 1), std::vector<std::uint8_t>(n, 0), std::vector<std::uint8_t>(n, 0),
            std::vector<std::uint8_t>(n, 1)};
}

bool SymplecticWitness::satisfies_quadratic() const noexcept {
    const std::size_t n = p.size();
    if (q.size() != n || r.size() != n || s.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (((p[i] & s[i]) ^ (q[i] & r[i])) != 1) return false;
    return true;
}

Gf2Matrix bouchet_system(const Graph& target, const Graph& source) {
    require_same_size(target, source);
    const std::size_t n = target.size();
    Gf2Matrix sys(n * n, 4 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t row = i * n + j;
            if (source.has_edge(i, j)) sys.set(row, i, true);
            if (i == j) sys.set(row, n + i, true);
            for (Vertex a : target.neighbors(i))
                if (source.has_edge(a, j)) sys.set(row, 2 * n + a, true);
            if (target.has_edge(i, j)) sys.set(row, 3 * n + j, true);
        }
    }
    return sys;
}

bool satisfies_linear_system(const Graph& target, const Graph& source, const SymplecticWitness& w) {
    require_same_size(target, source);
    const std::size_t n = target.size();
    if (w.size() != n) throw std::invalid_argument("witness size does not match graphs");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            unsigned acc = 0;
            if (source.has_edge(i, j)) acc ^= w.p[i];
            if (i == j) acc ^= w.q[i];
            for (Vertex a : target.neighbors(i))
                if (source.has_edge(a, j)) acc ^= w.r[a];
            if (target.has_edge(i, j)) acc ^= w.s[j];
            if (acc & 1U) return false;
        }
    }
    return true;
}

std::optional<SymplecticWitness> lc_equivalent(const Graph& target, const Graph& source) {
    require_same_size(target, source);
    const std::size_t n = target.size();
    const Gf2Matrix basis = bouchet_system(target, source).null_space();
    const std::size_t dim = basis.rows();
    if (n == 0) return SymplecticWitness{};

    // Coefficient vectors c over the null-space basis; form[col] holds bit k
    // when basis row k has column col set.
    std::vector<std::vector<Word>> form(4 * n, std::vector<Word>(words_for(dim + 1), 0));
    for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t col = 0; col < 4 * n; ++col)
            if (basis.get(k, col)) form[col][k / kWordBits] |= Word{1} << (k % kWordBits);

    std::vector<SolverFrame> stack;
    stack.push_back({CoefficientSystem(dim), 0, 0});
    while (!stack.empty()) {
        SolverFrame& top = stack.back();
        if (top.qubit == n) {
            const auto c = top.system.solution();
            Gf2Matrix v(1, 4 * n);
            for (std::size_t k = 0; k < dim; ++k)
                if (c[k])
                    for (std::size_t col = 0; col < 4 * n; ++col)
                        if (basis.get(k, col)) v.flip(0, col);
            return witness_from_vector(v, 0, n);
        }
        if (top.next_choice == kLocalChoices.size()) {
            stack.pop_back();
            continue;
        }
        const auto& choice = kLocalChoices[top.next_choice++];
        CoefficientSystem next = top.system;
        if (!next.fix_qubit(form, n, top.qubit, choice)) continue;
        bool viable = true;
        for (std::size_t j = top.qubit + 1; j < n && viable; ++j) {
            viable = false;
            for (const auto& other : kLocalChoices) {
                CoefficientSystem probe = next;
                if (probe.fix_qubit(form, n, j, other)) {
                    viable = true;
                    break;
                }
            }
        }
        if (viable) stack.push_back({std::move(next), top.qubit + 1, 0});
    }
    return std::nullopt;
}

Gf2Matrix witness_matrix(const SymplecticWitness& w) {
    const std::size_t n = w.size();
    Gf2Matrix m(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, w.p[i]);
        m.set(i, n + i, w.q[i]);
        m.set(n + i, i, w.r[i]);
        m.set(n + i, n + i, w.s[i]);
    }
    return m;
}

bool is_symplectic(const Gf2Matrix& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0) return false;
    const std::size_t n = m.rows() / 2;
    Gf2Matrix omega(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        omega.set(i, n + i, true);
        omega.set(n + i, i, true);
    }
    return m.transpose() * omega * m == omega;
}

StabilizerTableau graph_tableau(const Graph& g) {
    return {g.adjacency(), Gf2Matrix::identity(g.size())};
}

StabilizerTableau apply_witness(const Graph& g, const SymplecticWitness& w) {
    if (w.size() != g.size()) throw std::invalid_argument("witness size does not match graph");
    if (!w.satisfies_quadratic()) throw std::invalid_argument("witness violates p_i s_i + q_i r_i = 1");
    const std::size_t n = g.size();
    StabilizerTableau t{Gf2Matrix(n, n), Gf2Matrix(n, n)};
    // Row i of the new blocks: z_i' = p_i z_i + q_i x_i, x_i' = r_i z_i + s_i x_i.
    for (std::size_t i = 0; i < n; ++i) {
        for (Vertex j : g.neighbors(i)) {
            if (w.p[i]) t.z_block.set(i, j, true);
            if (w.r[i]) t.x_block.set(i, j, true);
        }
        if (w.q[i]) t.z_block.flip(i, i);
        if (w.s[i]) t.x_block.flip(i, i);
    }
    return t;
}

bool is_valid_tableau(const StabilizerTableau& t) {
    const std::size_t n = t.size();
    if (t.z_block.rows() != n || t.x_block.rows() != n || t.x_block.cols() != n) return false;
    const Gf2Matrix commutator = t.z_block.transpose() * t.x_block + t.x_block.transpose() * t.z_block;
    return commutator.is_zero() && t.stacked().rank() == n;
}

std::optional<Graph> tableau_to_graph(const StabilizerTableau& t) {
    if (!is_valid_tableau(t)) throw std::invalid_argument("tableau is not a commuting full-rank generator set");
    const auto inv = t.x_block.inverse();
    if (!inv) return std::nullopt;
    const Gf2Matrix adj = t.z_block * *inv;
    const std::size_t n = t.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (adj.get(i, i)) return std::nullopt;
        for (std::size_t j = i + 1; j < n; ++j)
            if (adj.get(i, j) != adj.get(j, i)) return std::nullopt;
    }
    return Graph::from_adjacency(adj);
}

bool same_stabilizer_state(const StabilizerTableau& a, const StabilizerTableau& b) {
    if (a.size() != b.size()) throw std::invalid_argument("tableaux act on different numbers of qubits");
    const Gf2Matrix ka = a.stacked();
    const Gf2Matrix kb = b.stacked();
    const std::size_t ra = ka.rank();
    return ra == kb.rank() && ka.concat(kb).rank() == ra;
}

std::string witness_to_json(const SymplecticWitness& w) {
    nlohmann::json j;
    j["p"] = w.p;
    j["q"] = w.q;
    j["r"] = w.r;
    j["s"] = w.s;
    return j.dump();
}

SymplecticWitness witness_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("witness JSON: ") + e.what());
    }
    SymplecticWitness w;
    auto read = [&](const char* key, std::vector<std::uint8_t>& out) {
        if (!j.contains(key) || !j[key].is_array()) throw ParseError(std::string("witness JSON: missing ") + key);
        for (const auto& v : j[key]) {
            if (!v.is_number_unsigned() || v.get<unsigned>() > 1) throw ParseError("witness JSON: entries must be 0/1");
            out.push_back(static_cast<std::uint8_t>(v.get<unsigned>()));
        }
    };
    read("p", w.p);
    read("q", w.q);
    read("r", w.r);
    read("s", w.s);
    if (w.q.size() != w.p.size() || w.r.size() != w.p.size() || w.s.size() != w.p.size())
        throw ParseError("witness JSON: vectors differ in length");
    return w;
}

}  // namespace edgemin
