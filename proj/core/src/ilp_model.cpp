#include "edgemin/ilp_model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace edgemin {

bool LinearConstraint::satisfied_by(std::span<const std::int64_t> assignment) const {
    std::int64_t lhs = 0;
    for (const auto& t : terms) lhs += t.coef * assignment[t.var];
    switch (relation) {
        case Relation::less_equal: return lhs <= rhs;
        case Relation::equal: return lhs == rhs;
        case Relation::greater_equal: return lhs >= rhs;
    }
    return false;
}

VarId IlpModel::add_variable(IlpVariable v) {
    if (v.lower > v.upper) throw std::invalid_argument("variable " + v.name + " has lower > upper");
    if (by_name_.contains(v.name)) throw std::invalid_argument("duplicate variable name " + v.name);
    const auto id = static_cast<VarId>(vars_.size());
    by_name_.emplace(v.name, id);
    vars_.push_back(std::move(v));
    return id;
}

VarId IlpModel::add_binary(std::string name) {
    return add_variable({std::move(name), 0, 1, VarKind::binary});
}

VarId IlpModel::add_integer(std::string name, std::int64_t lower, std::int64_t upper) {
    return add_variable({std::move(name), lower, upper, VarKind::integer});
}

void IlpModel::add_constraint(std::string name, std::vector<LinearTerm> terms, Relation relation,
                              std::int64_t rhs) {
    std::map<VarId, std::int64_t> merged;
    for (const auto& t : terms) {
        if (t.var >= vars_.size()) throw std::invalid_argument("constraint " + name + " uses an undeclared variable");
        merged[t.var] += t.coef;
    }
    // Keep the caller's term order for the first occurrence of each variable.
    std::vector<LinearTerm> canonical;
    for (const auto& t : terms) {
        auto it = merged.find(t.var);
        if (it == merged.end()) continue;
        if (it->second != 0) canonical.push_back({it->second, t.var});
        merged.erase(it);
    }
    cons_.push_back({std::move(name), std::move(canonical), relation, rhs});
}

void IlpModel::add_objective(VarId var, double coef) {
    if (var >= vars_.size()) throw std::invalid_argument("objective uses an undeclared variable");
    if (coef == 0.0) return;
    for (auto& t : obj_) {
        if (t.var == var) {
            t.coef += coef;
            return;
        }
    }
    obj_.push_back({coef, var});
}

std::optional<VarId> IlpModel::find(const std::string& name) const {
    const auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

VarId IlpModel::at(const std::string& name) const {
    if (auto id = find(name)) return *id;
    throw std::out_of_range("no variable named " + name);
}

void IlpModel::validate() const {
    for (const auto& v : vars_) {
        if (v.lower > v.upper) throw std::invalid_argument("variable " + v.name + " has lower > upper");
        if (v.kind == VarKind::binary && (v.lower < 0 || v.upper > 1))
            throw std::invalid_argument("binary variable " + v.name + " has bounds outside [0, 1]");
    }
    for (const auto& c : cons_)
        for (const auto& t : c.terms)
            if (t.var >= vars_.size()) throw std::invalid_argument("constraint " + c.name + " uses an undeclared variable");
    for (const auto& t : obj_)
        if (t.var >= vars_.size()) throw std::invalid_argument("objective uses an undeclared variable");
}

bool IlpModel::is_feasible(std::span<const std::int64_t> assignment) const {
    if (assignment.size() != vars_.size()) return false;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (assignment[i] < vars_[i].lower || assignment[i] > vars_[i].upper) return false;
    return std::all_of(cons_.begin(), cons_.end(), [&](const LinearConstraint& c) { return c.satisfied_by(assignment); });
}

double IlpModel::objective_value(std::span<const std::int64_t> assignment) const {
    double v = 0.0;
    for (const auto& t : obj_) v += t.coef * static_cast<double>(assignment[t.var]);
    return v;
}

bool IlpModel::has_integral_objective() const {
    return std::all_of(obj_.begin(), obj_.end(), [](const ObjectiveTerm& t) { return std::floor(t.coef) == t.coef; });
}

const char* to_string(SolveStatus s) noexcept {
    switch (s) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::infeasible: return "infeasible";
        case SolveStatus::budget_exhausted: return "budget_exhausted";
    }
    return "unknown";
}

}  // namespace edgemin
