#include "edgemin/edm_ilp.hpp"

#include <stdexcept>
#include <string>

namespace edgemin {

namespace {

std::string nm(const char* prefix, std::size_t a) { return std::string(prefix) + "_" + std::to_string(a); }
std::string nm(const char* prefix, std::size_t a, std::size_t b) {
    return std::string(prefix) + "_" + std::to_string(a) + "_" + std::to_string(b);
}

std::string ah_name(std::size_t i, std::size_t j) { return i < j ? nm("AH", i, j) : nm("AH", j, i); }

void add_product(IlpModel& m, VarId y, VarId x, VarId z, const std::string& tag) {
    m.add_constraint(tag + "_le_a", {{1, y}, {-1, x}}, Relation::less_equal, 0);
    m.add_constraint(tag + "_le_b", {{1, y}, {-1, z}}, Relation::less_equal, 0);
    m.add_constraint(tag + "_ge", {{1, y}, {-1, x}, {-1, z}}, Relation::greater_equal, -1);
}

}  // namespace

std::size_t edm_ilp_variable_count(std::size_t n) {
    return n * (n - (n > 0 ? 1 : 0)) / 2 + 4 * n + 2 * n * (n - (n > 0 ? 1 : 0)) + 2 * n + n * n;
}

std::size_t edm_ilp_constraint_count(std::size_t n) { return 7 * n * n + n; }

IlpModel build_edm_ilp(const Graph& g, const WeightMatrix* weights) {
    const std::size_t n = g.size();
    if (n < 1) throw std::invalid_argument("EDM ILP needs at least one vertex");
    if (weights && weights->size() != n) throw std::invalid_argument("weight matrix size does not match graph");

    IlpModel m;
    for (std::size_t a = 0; a < n; ++a) m.add_binary(nm("P", a));
    for (std::size_t a = 0; a < n; ++a) m.add_binary(nm("R", a));
    for (std::size_t a = 0; a < n; ++a) m.add_binary(nm("Q", a));
    for (std::size_t a = 0; a < n; ++a) m.add_binary(nm("S", a));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m.add_binary(nm("AH", i, j));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t j = 0; j < n; ++j)
            if (a != j) m.add_binary(nm("ZP", a, j));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t j = 0; j < n; ++j)
            if (a != j) m.add_binary(nm("ZR", a, j));
    for (std::size_t a = 0; a < n; ++a) m.add_binary(nm("ZPS", a));
    for (std::size_t a = 0; a < n; ++a) m.add_binary(nm("ZRQ", a));
    for (std::size_t i = 0; i < n; ++i) {
        const auto ub = static_cast<std::int64_t>((g.degree(i) + 3) / 2);
        for (std::size_t j = 0; j < n; ++j) m.add_integer(nm("B", i, j), 0, ub);
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<LinearTerm> t;
            if (i != j)
                t.push_back({1, m.at(nm("ZP", i, j))});
            else
                t.push_back({1, m.at(nm("Q", i))});
            for (Vertex a : g.neighbors(i))
                if (a != j) t.push_back({1, m.at(nm("ZR", a, j))});
            if (g.has_edge(i, j)) t.push_back({1, m.at(nm("S", j))});
            t.push_back({-2, m.at(nm("B", i, j))});
            m.add_constraint(nm("E", i, j), std::move(t), Relation::equal, 0);
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t j = 0; j < n; ++j)
            if (a != j) add_product(m, m.at(nm("ZP", a, j)), m.at(nm("P", a)), m.at(ah_name(a, j)), nm("LP", a, j));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t j = 0; j < n; ++j)
            if (a != j) add_product(m, m.at(nm("ZR", a, j)), m.at(nm("R", a)), m.at(ah_name(a, j)), nm("LR", a, j));
    for (std::size_t a = 0; a < n; ++a) {
        add_product(m, m.at(nm("ZPS", a)), m.at(nm("P", a)), m.at(nm("S", a)), nm("LPS", a));
        add_product(m, m.at(nm("ZRQ", a)), m.at(nm("R", a)), m.at(nm("Q", a)), nm("LRQ", a));
        m.add_constraint(nm("D", a), {{1, m.at(nm("ZPS", a))}, {1, m.at(nm("ZRQ", a))}}, Relation::equal, 1);
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            m.add_objective(m.at(nm("AH", i, j)), weights ? weights->at(i, j) : 1.0);
    return m;
}

std::vector<std::int64_t> identity_assignment(const IlpModel& model, const Graph& g) {
    const std::size_t n = g.size();
    std::vector<std::int64_t> x(model.variable_count(), 0);
    auto set = [&](const std::string& name, std::int64_t v) { x[model.at(name)] = v; };
    for (std::size_t a = 0; a < n; ++a) {
        set(nm("P", a), 1);
        set(nm("S", a), 1);
        set(nm("ZPS", a), 1);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const std::int64_t e = g.has_edge(i, j) ? 1 : 0;
            if (i < j) set(nm("AH", i, j), e);
            set(nm("ZP", i, j), e);
            // Row (i, j) sums ZP_i_j and G[i,j] S_j, i.e. 2 G[i,j].
            set(nm("B", i, j), e);
        }
    }
    return x;
}

Graph decode_graph(const IlpModel& model, std::size_t n, std::span<const std::int64_t> assignment) {
    Graph h(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (assignment[model.at(nm("AH", i, j))] != 0) h.add_edge(i, j);
    return h;
}

SymplecticWitness decode_witness(const IlpModel& model, std::size_t n, std::span<const std::int64_t> assignment) {
    SymplecticWitness w;
    for (std::size_t a = 0; a < n; ++a) {
        w.p.push_back(static_cast<std::uint8_t>(assignment[model.at(nm("P", a))]));
        w.q.push_back(static_cast<std::uint8_t>(assignment[model.at(nm("Q", a))]));
        w.r.push_back(static_cast<std::uint8_t>(assignment[model.at(nm("R", a))]));
        w.s.push_back(static_cast<std::uint8_t>(assignment[model.at(nm("S", a))]));
    }
    return w;
}

EdmIlpResult edm_ilp(const Graph& g, const WeightMatrix* weights, SolverOptions options) {
    const IlpModel model = build_edm_ilp(g, weights);
    if (options.hint.empty()) options.hint = identity_assignment(model, g);
    EdmIlpResult res;
    res.solution = solve_builtin(model, options);
    if (res.solution.has_assignment()) {
        res.graph = decode_graph(model, g.size(), res.solution.assignment);
        res.witness = decode_witness(model, g.size(), res.solution.assignment);
    }
    return res;
}

SailpResult edm_sailp(const Graph& g, const SaConfig& cfg, SolverOptions options) {
    SailpResult res;
    res.sa = edm_sa(g, cfg);
    const WeightMatrix* weights = cfg.weights ? &*cfg.weights : nullptr;
    res.ilp = edm_ilp(res.sa.best_graph, weights, std::move(options));
    return res;
}

WeightMatrix vertex_minor_weights(const Graph& g, const Graph& h, std::span<const Vertex> subset,
                                  IsolatedVertexPolicy policy) {
    if (h.size() != subset.size()) throw std::invalid_argument("subset size must equal h's vertex count");
    std::vector<bool> seen(g.size(), false);
    for (Vertex v : subset) {
        if (v >= g.size() || seen[v]) throw std::invalid_argument("subset must list distinct vertices of g");
        seen[v] = true;
    }
    WeightMatrix w(g.size());
    for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = a + 1; b < subset.size(); ++b)
            w.set(subset[a], subset[b], h.has_edge(a, b) ? -1.0 : 1.0);
    for (std::size_t k = 0; k < h.size(); ++k) {
        if (h.size() < 2 || h.degree(k) > 0) continue;
        if (policy == IsolatedVertexPolicy::reject)
            throw std::invalid_argument("h has an isolated vertex; choose an IsolatedVertexPolicy");
        const std::size_t partner = (k == 0) ? 1 : 0;
        w.set(subset[k], subset[partner], 0.0);
    }
    return w;
}

VertexMinorDecision vertex_minor_by_ilp(const Graph& g, const Graph& h, std::span<const Vertex> subset,
                                        IsolatedVertexPolicy policy, SolverOptions options) {
    const WeightMatrix w = vertex_minor_weights(g, h, subset, policy);
    const auto res = edm_ilp(g, &w, std::move(options));
    VertexMinorDecision d;
    d.status = res.solution.status;
    d.optimum = res.solution.objective_value;
    d.is_minor = res.solution.status == SolveStatus::optimal &&
                 d.optimum <= -static_cast<double>(h.edge_count()) + 1e-9;
    return d;
}

}  // namespace edgemin
