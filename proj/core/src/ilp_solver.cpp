#include "edgemin/ilp_solver.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

#include "edgemin/gf2_matrix.hpp"

namespace edgemin {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    // b > 0
    std::int64_t q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

struct ProductDef {
    VarId x = 0;
    VarId z = 0;
};

class BranchAndBound {
public:
    BranchAndBound(const IlpModel& model, const SolverOptions& opts) : model_(model), opts_(opts) {
        const std::size_t nv = model.variable_count();
        lo_.resize(nv);
        hi_.resize(nv);
        for (std::size_t v = 0; v < nv; ++v) {
            lo_[v] = model.variables()[v].lower;
            hi_[v] = model.variables()[v].upper;
        }
        var_cons_.resize(nv);
        for (std::size_t c = 0; c < model.constraint_count(); ++c)
            for (const auto& t : model.constraints()[c].terms) var_cons_[t.var].push_back(c);
        in_queue_.assign(model.constraint_count(), false);

        obj_coef_.assign(nv, 0.0);
        for (const auto& t : model.objective()) obj_coef_[t.var] += t.coef;
        integral_objective_ = model.has_integral_objective();

        for (std::size_t v = 0; v < nv; ++v)
            if (model.variables()[v].kind == VarKind::binary) order_.push_back(static_cast<VarId>(v));
        for (std::size_t v = 0; v < nv; ++v)
            if (model.variables()[v].kind != VarKind::binary) order_.push_back(static_cast<VarId>(v));

        if (opts.parity_propagation) {
            detect_parity_rows();
            detect_products();
        }
    }

    IlpSolution run() {
        IlpSolution sol;
        if (opts_.hint.size() == model_.variable_count() && model_.is_feasible(opts_.hint)) {
            incumbent_ = opts_.hint;
            incumbent_value_ = model_.objective_value(opts_.hint);
        }
        for (std::size_t c = 0; c < model_.constraint_count(); ++c) enqueue(c);
        if (propagate()) dfs();
        sol.nodes = nodes_;
        if (!incumbent_.empty()) {
            sol.assignment = incumbent_;
            sol.objective_value = incumbent_value_;
        }
        if (aborted_)
            sol.status = SolveStatus::budget_exhausted;
        else
            sol.status = incumbent_.empty() ? SolveStatus::infeasible : SolveStatus::optimal;
        return sol;
    }

private:
    bool fixed(VarId v) const { return lo_[v] == hi_[v]; }

    void enqueue(std::size_t c) {
        if (!in_queue_[c]) {
            in_queue_[c] = true;
            queue_.push_back(c);
        }
    }

    /// Narrows [lo, hi] of v; false on an empty domain.
    bool tighten(VarId v, std::int64_t new_lo, std::int64_t new_hi) {
        new_lo = std::max(new_lo, lo_[v]);
        new_hi = std::min(new_hi, hi_[v]);
        if (new_lo > new_hi) return false;
        if (new_lo == lo_[v] && new_hi == hi_[v]) return true;
        trail_.push_back({v, lo_[v], hi_[v]});
        lo_[v] = new_lo;
        hi_[v] = new_hi;
        for (std::size_t c : var_cons_[v]) enqueue(c);
        return true;
    }

    bool propagate_constraint(const LinearConstraint& c) {
        std::int64_t min_act = 0;
        std::int64_t max_act = 0;
        for (const auto& t : c.terms) {
            if (t.coef > 0) {
                min_act += t.coef * lo_[t.var];
                max_act += t.coef * hi_[t.var];
            } else {
                min_act += t.coef * hi_[t.var];
                max_act += t.coef * lo_[t.var];
            }
        }
        const bool upper = c.relation != Relation::greater_equal;
        const bool lower = c.relation != Relation::less_equal;
        if (upper && min_act > c.rhs) return false;
        if (lower && max_act < c.rhs) return false;
        for (const auto& t : c.terms) {
            const VarId v = t.var;
            // Both activities were computed from these bounds.
            const std::int64_t l = lo_[v];
            const std::int64_t h = hi_[v];
            std::int64_t new_lo = l;
            std::int64_t new_hi = h;
            if (upper) {
                const std::int64_t slack = c.rhs - min_act;
                if (t.coef > 0)
                    new_hi = std::min(new_hi, l + floor_div(slack, t.coef));
                else
                    new_lo = std::max(new_lo, h - floor_div(slack, -t.coef));
            }
            if (lower) {
                const std::int64_t slack = max_act - c.rhs;
                if (t.coef > 0)
                    new_lo = std::max(new_lo, h - floor_div(slack, t.coef));
                else
                    new_hi = std::min(new_hi, l + floor_div(slack, -t.coef));
            }
            // Later terms still use the stale activities, which only weakens
            // their bounds; tighten() re-enqueues this constraint.
            if (!tighten(v, new_lo, new_hi)) return false;
        }
        return true;
    }

    bool propagate_bounds() {
        while (!queue_.empty()) {
            const std::size_t c = queue_.back();
            queue_.pop_back();
            in_queue_[c] = false;
            if (!propagate_constraint(model_.constraints()[c])) {
                for (std::size_t q : queue_) in_queue_[q] = false;
                queue_.clear();
                return false;
            }
        }
        return true;
    }

    void detect_parity_rows() {
        for (const auto& c : model_.constraints()) {
            if (c.relation != Relation::equal) continue;
            std::vector<VarId> odd;
            bool ok = true;
            for (const auto& t : c.terms) {
                if (t.coef % 2 == 0) continue;
                if (model_.variables()[t.var].kind != VarKind::binary) {
                    ok = false;
                    break;
                }
                odd.push_back(t.var);
            }
            if (!ok || odd.empty()) continue;
            parity_rows_.push_back({std::move(odd), static_cast<std::uint8_t>(((c.rhs % 2) + 2) % 2)});
        }
    }

    /// Recognises y <= x, y <= z, x + z - y <= 1 over binaries.
    void detect_products() {
        const auto& vars = model_.variables();
        auto is_bin = [&](VarId v) { return vars[v].kind == VarKind::binary; };
        std::set<std::pair<VarId, VarId>> le;  // (y, x) meaning y <= x
        struct Triple {
            VarId y, x, z;
        };
        std::vector<Triple> joins;
        for (const auto& c : model_.constraints()) {
            // Normalise to sum <= rhs.
            std::vector<LinearTerm> t = c.terms;
            std::int64_t rhs = c.rhs;
            if (c.relation == Relation::equal) continue;
            if (c.relation == Relation::greater_equal) {
                for (auto& term : t) term.coef = -term.coef;
                rhs = -rhs;
            }
            if (t.size() == 2 && rhs == 0) {
                const auto& a = t[0];
                const auto& b = t[1];
                if (a.coef == 1 && b.coef == -1 && is_bin(a.var) && is_bin(b.var)) le.insert({a.var, b.var});
                if (a.coef == -1 && b.coef == 1 && is_bin(a.var) && is_bin(b.var)) le.insert({b.var, a.var});
            } else if (t.size() == 3 && rhs == 1) {
                int neg = -1;
                int pos_count = 0;
                for (int k = 0; k < 3; ++k) {
                    if (!is_bin(t[k].var)) neg = -2;
                    if (t[k].coef == -1 && neg == -1) neg = k;
                    else if (t[k].coef == 1) ++pos_count;
                }
                if (neg >= 0 && pos_count == 2) {
                    std::vector<VarId> f;
                    for (int k = 0; k < 3; ++k)
                        if (k != neg) f.push_back(t[k].var);
                    joins.push_back({t[neg].var, f[0], f[1]});
                }
            }
        }
        products_.assign(model_.variable_count(), std::nullopt);
        for (const auto& j : joins)
            if (le.contains({j.y, j.x}) && le.contains({j.y, j.z})) products_[j.y] = ProductDef{j.x, j.z};
    }

    /// Value of v if known, or the unfixed variable it currently equals.
    std::pair<int, VarId> resolve(VarId v, int depth = 0) const {
        if (fixed(v)) return {static_cast<int>(lo_[v]), v};
        if (depth < 4 && products_[v]) {
            const auto [x, z] = *products_[v];
            if ((fixed(x) && lo_[x] == 0) || (fixed(z) && lo_[z] == 0)) return {0, v};
            if (fixed(x) && lo_[x] == 1) return resolve(z, depth + 1);
            if (fixed(z) && lo_[z] == 1) return resolve(x, depth + 1);
        }
        return {-1, v};
    }

    enum class Gf2Outcome { conflict, changed, quiet };

    Gf2Outcome parity_step() {
        if (parity_rows_.empty()) return Gf2Outcome::quiet;
        col_of_.assign(model_.variable_count(), -1);
        cols_.clear();
        std::vector<std::vector<VarId>> row_cols;
        std::vector<std::uint8_t> rhs;
        row_cols.reserve(parity_rows_.size());
        for (const auto& row : parity_rows_) {
            std::uint8_t b = row.rhs;
            std::vector<VarId> unknown;
            for (VarId v : row.vars) {
                const auto [val, u] = resolve(v);
                if (val >= 0) {
                    b ^= static_cast<std::uint8_t>(val & 1);
                } else {
                    unknown.push_back(u);
                    if (col_of_[u] < 0) {
                        col_of_[u] = static_cast<int>(cols_.size());
                        cols_.push_back(u);
                    }
                }
            }
            if (unknown.empty()) {
                if (b) return Gf2Outcome::conflict;
                continue;
            }
            row_cols.push_back(std::move(unknown));
            rhs.push_back(b);
        }
        if (row_cols.empty()) return Gf2Outcome::quiet;
        const std::size_t nc = cols_.size();
        Gf2Matrix m(row_cols.size(), nc + 1);
        for (std::size_t r = 0; r < row_cols.size(); ++r) {
            for (VarId u : row_cols[r]) m.flip(r, static_cast<std::size_t>(col_of_[u]));
            if (rhs[r]) m.set(r, nc, true);
        }
        const auto pivots = m.row_reduce();
        if (!pivots.empty() && pivots.back() == nc) return Gf2Outcome::conflict;

        std::vector<std::pair<VarId, std::int64_t>> forced;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            std::size_t ones = 0;
            const auto row = m.row(r);
            for (std::size_t w = 0; w < row.size(); ++w) ones += static_cast<std::size_t>(std::popcount(row[w]));
            const bool b = m.get(r, nc);
            if (ones - (b ? 1 : 0) == 1) forced.emplace_back(cols_[pivots[r]], b ? 1 : 0);
        }
        if (forced.empty()) return Gf2Outcome::quiet;
        for (const auto& [v, val] : forced)
            if (!tighten(v, val, val)) return Gf2Outcome::conflict;
        return Gf2Outcome::changed;
    }

    bool propagate() {
        for (;;) {
            if (!propagate_bounds()) return false;
            const auto outcome = parity_step();
            if (outcome == Gf2Outcome::conflict) return false;
            if (outcome == Gf2Outcome::quiet && queue_.empty()) return true;
        }
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const auto& e = trail_.back();
            lo_[e.var] = e.lo;
            hi_[e.var] = e.hi;
            trail_.pop_back();
        }
    }

    double lower_bound() const {
        double lb = 0.0;
        for (const auto& t : model_.objective())
            lb += t.coef * static_cast<double>(t.coef >= 0 ? lo_[t.var] : hi_[t.var]);
        return lb;
    }

    bool prunable(double lb) const {
        if (incumbent_.empty()) return false;
        if (integral_objective_) return lb > incumbent_value_ - 1.0 + 1e-9;
        return lb >= incumbent_value_ - 1e-9;
    }

    std::vector<std::int64_t> value_order(VarId v) const {
        std::vector<std::int64_t> vals;
        for (std::int64_t x = lo_[v]; x <= hi_[v]; ++x) vals.push_back(x);
        if (obj_coef_[v] < 0) std::reverse(vals.begin(), vals.end());
        if (opts_.hint.size() == model_.variable_count()) {
            auto it = std::find(vals.begin(), vals.end(), opts_.hint[v]);
            if (it != vals.end()) std::rotate(vals.begin(), it, it + 1);
        }
        return vals;
    }

    void dfs() {
        if (aborted_) return;
        if (++nodes_ > opts_.node_budget || opts_.stop.stop_requested()) {
            aborted_ = true;
            return;
        }
        if (prunable(lower_bound())) return;

        const auto it = std::find_if(order_.begin(), order_.end(), [&](VarId v) { return !fixed(v); });
        if (it == order_.end()) {
            const double value = lower_bound();
            if (model_.is_feasible(lo_) && (incumbent_.empty() || value < incumbent_value_ - 1e-12)) {
                incumbent_ = lo_;
                incumbent_value_ = value;
            }
            return;
        }
        const VarId v = *it;
        for (std::int64_t val : value_order(v)) {
            const std::size_t mark = trail_.size();
            if (tighten(v, val, val) && propagate()) dfs();
            undo_to(mark);
            if (aborted_) return;
        }
    }

    struct TrailEntry {
        VarId var;
        std::int64_t lo, hi;
    };
    struct ParityRow {
        std::vector<VarId> vars;
        std::uint8_t rhs;
    };

    const IlpModel& model_;
    const SolverOptions& opts_;
    std::vector<std::int64_t> lo_, hi_;
    std::vector<std::vector<std::size_t>> var_cons_;
    std::vector<std::size_t> queue_;
    std::vector<bool> in_queue_;
    std::vector<TrailEntry> trail_;
    std::vector<double> obj_coef_;
    bool integral_objective_ = false;
    std::vector<VarId> order_;
    std::vector<ParityRow> parity_rows_;
    std::vector<std::optional<ProductDef>> products_;
    std::vector<int> col_of_;
    std::vector<VarId> cols_;

    std::vector<std::int64_t> incumbent_;
    double incumbent_value_ = std::numeric_limits<double>::infinity();
    std::size_t nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace

IlpSolution solve_builtin(const IlpModel& model, const SolverOptions& options) {
    model.validate();
    constexpr std::int64_t kMaxDomain = 1 << 20;
    for (const auto& v : model.variables())
        if (v.upper - v.lower > kMaxDomain)
            throw std::invalid_argument("variable " + v.name + " has too wide a domain for the built-in solver");
    BranchAndBound bb(model, options);
    return bb.run();
}

}  // namespace edgemin
