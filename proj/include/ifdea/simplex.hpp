// simplex.hpp - self-contained LP solver for the small dense programs the
// DEA models produce. Two-phase simplex on a dense tableau with Bland's
// anti-cycling rule.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ifdea {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
    std::vector<double> coefficients;
    Relation relation = Relation::LessEqual;
    double rhs = 0.0;
};

// Minimization LP: minimize objective . x + constant_term. Each variable
// carries a lower bound; std::nullopt marks a free variable. No upper
// bounds.
struct LinearProgram {
    std::vector<double> objective;
    double constant_term = 0.0;
    std::vector<LinearConstraint> constraints;
    std::vector<std::optional<double>> lower_bounds;

    std::size_t num_variables() const { return objective.size(); }

    // Throws std::invalid_argument on dimension mismatch or non-finite data.
    void validate() const;

    // Plain-text dump (objective, constraints, bounds) for external
    // cross-checking. Layout is documented in the README, not bit-critical.
    std::string to_text() const;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    SolveStatus status = SolveStatus::Infeasible;
    double objective_value = 0.0;
    std::vector<double> variable_values;  // filled iff status == Optimal
    int iterations = 0;
};

struct SolverOptions {
    double feasibility_tol = 1e-9;
    double pivot_tol = 1e-10;
    int iteration_cap_factor = 10;  // cap = factor * (rows + cols)^2
};

// Infeasible / unbounded are reported via status. Throws
// std::invalid_argument on malformed input and std::runtime_error if the
// iteration cap is hit (which Bland's rule rules out short of a bug).
LpSolution solve(const LinearProgram& lp, const SolverOptions& options = {});

}  // namespace ifdea
