#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace edgemin {

using VarId = std::uint32_t;

enum class VarKind { binary, integer };
enum class Relation { less_equal, equal, greater_equal };

struct IlpVariable {
    std::string name;
    std::int64_t lower = 0;
    std::int64_t upper = 1;
    VarKind kind = VarKind::binary;
};

struct LinearTerm {
    std::int64_t coef = 0;
    VarId var = 0;
};

struct LinearConstraint {
    std::string name;
    std::vector<LinearTerm> terms;
    Relation relation = Relation::equal;
    std::int64_t rhs = 0;

    bool satisfied_by(std::span<const std::int64_t> assignment) const;
};

struct ObjectiveTerm {
    double coef = 0.0;
    VarId var = 0;
};

/// Minimisation ILP over bounded integer variables.
class IlpModel {
public:
    VarId add_binary(std::string name);
    VarId add_integer(std::string name, std::int64_t lower, std::int64_t upper);

    /// Merges repeated variables and drops zero coefficients before storing.
    void add_constraint(std::string name, std::vector<LinearTerm> terms, Relation relation, std::int64_t rhs);

    /// Adds c * var to the objective; zero coefficients are not stored.
    void add_objective(VarId var, double coef);

    const std::vector<IlpVariable>& variables() const noexcept { return vars_; }
    const std::vector<LinearConstraint>& constraints() const noexcept { return cons_; }
    const std::vector<ObjectiveTerm>& objective() const noexcept { return obj_; }

    std::size_t variable_count() const noexcept { return vars_.size(); }
    std::size_t constraint_count() const noexcept { return cons_.size(); }

    std::optional<VarId> find(const std::string& name) const;
    VarId at(const std::string& name) const;

    /// Every objective and constraint term names a declared variable and all
    /// bounds are ordered. Throws std::invalid_argument otherwise.
    void validate() const;

    bool is_feasible(std::span<const std::int64_t> assignment) const;
    double objective_value(std::span<const std::int64_t> assignment) const;
    /// All objective coefficients are integers (all variables are integral).
    bool has_integral_objective() const;

private:
    VarId add_variable(IlpVariable v);

    std::vector<IlpVariable> vars_;
    std::vector<LinearConstraint> cons_;
    std::vector<ObjectiveTerm> obj_;
    std::unordered_map<std::string, VarId> by_name_;
};

enum class SolveStatus { optimal, infeasible, budget_exhausted };

const char* to_string(SolveStatus s) noexcept;

struct IlpSolution {
    /// Indexed by VarId; empty when no feasible assignment is known.
    std::vector<std::int64_t> assignment;
    double objective_value = 0.0;
    SolveStatus status = SolveStatus::infeasible;
    std::size_t nodes = 0;

    bool has_assignment() const noexcept { return !assignment.empty(); }
};

}  // namespace edgemin
