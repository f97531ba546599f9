#include "edgemin/fusion.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace edgemin {

namespace {

class PlanBuilder {
public:
    PlanBuilder(double p, FusionPlan& plan) : p_(p), plan_(plan) {}

    int leaf() {
        plan_.nodes.push_back({});
        ++plan_.ghz3_count;
        return static_cast<int>(plan_.nodes.size()) - 1;
    }

    int merge(int a, int b) {
        const auto& l = plan_.nodes[static_cast<std::size_t>(a)];
        const auto& r = plan_.nodes[static_cast<std::size_t>(b)];
        FusionNode node{FusionNode::Kind::merge, a, b, (l.expected_resources + r.expected_resources) / p_,
                        (l.expected_fusions + r.expected_fusions + 1.0) / p_};
        plan_.nodes.push_back(node);
        ++plan_.fusion_count;
        return static_cast<int>(plan_.nodes.size()) - 1;
    }

    int close(int a) {
        const auto& c = plan_.nodes[static_cast<std::size_t>(a)];
        FusionNode node{FusionNode::Kind::close, a, -1, c.expected_resources / p_, (c.expected_fusions + 1.0) / p_};
        plan_.nodes.push_back(node);
        ++plan_.fusion_count;
        return static_cast<int>(plan_.nodes.size()) - 1;
    }

    /// Balanced merge tree over `count` fresh leaves.
    int star(std::size_t count) {
        if (count == 1) return leaf();
        const std::size_t half = count / 2;
        const int a = star(count - half);
        const int b = star(half);
        return merge(a, b);
    }

    double resources(int node) const { return plan_.nodes[static_cast<std::size_t>(node)].expected_resources; }

private:
    double p_;
    FusionPlan& plan_;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

double FusionPlan::expected_resources() const {
    double total = 0.0;
    for (int r : roots) total += nodes[static_cast<std::size_t>(r)].expected_resources;
    return total;
}

double FusionPlan::expected_fusions() const {
    double total = 0.0;
    for (int r : roots) total += nodes[static_cast<std::size_t>(r)].expected_fusions;
    return total;
}

FusionPlan fusion_plan(const Graph& target, double p, PairingRule rule) {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("fusion success probability must lie in (0, 1]");
    const std::size_t n = target.size();
    FusionPlan plan;
    PlanBuilder b(p, plan);

    // Union-find over vertices; node_of[root] is the fusion node of that piece.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::vector<int> node_of(n);
    for (Vertex v = 0; v < n; ++v) {
        const std::size_t d = target.degree(v);
        node_of[v] = b.star(d >= 2 ? d - 1 : 1);
    }

    std::vector<Edge> pending = target.edges();
    auto join = [&](std::size_t idx) {
        const auto [u, v] = pending[idx];
        const std::size_t ru = find_root(parent, u);
        const std::size_t rv = find_root(parent, v);
        if (ru == rv) {
            node_of[ru] = b.close(node_of[ru]);
        } else {
            const int m = b.merge(node_of[ru], node_of[rv]);
            parent[rv] = ru;
            node_of[ru] = m;
        }
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(idx));
    };

    if (rule == PairingRule::sequential) {
        while (!pending.empty()) join(0);
    } else {
        while (!pending.empty()) {
            std::size_t pick = pending.size();
            for (std::size_t k = 0; k < pending.size(); ++k) {
                if (find_root(parent, pending[k].first) == find_root(parent, pending[k].second)) {
                    pick = k;
                    break;
                }
            }
            if (pick == pending.size()) {
                double best = std::numeric_limits<double>::infinity();
                for (std::size_t k = 0; k < pending.size(); ++k) {
                    const double cost = b.resources(node_of[find_root(parent, pending[k].first)]) +
                                        b.resources(node_of[find_root(parent, pending[k].second)]);
                    if (cost < best) {
                        best = cost;
                        pick = k;
                    }
                }
            }
            join(pick);
        }
    }

    for (Vertex v = 0; v < n; ++v)
        if (find_root(parent, v) == v) plan.roots.push_back(node_of[v]);
    return plan;
}

}  // namespace edgemin
