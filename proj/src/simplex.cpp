#include "ifdea/simplex.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ifdea {

namespace {

void append_double(std::string& out, double v) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    out.append(buf.data(), ptr);
}

// LP in computational standard form: minimize cost . x, A x = rhs, x >= 0.
// Original variables are shifted to their lower bounds; free variables are
// split into positive and negative parts.
struct Standardized {
    std::vector<std::vector<double>> a;  // rows x cols
    std::vector<double> rhs;             // >= 0
    std::vector<double> cost;            // phase-2 cost per column
    std::size_t cols = 0;
    std::size_t first_artificial = 0;    // columns >= this are artificial
    std::vector<int> basis;              // per row: basic column
    struct VarMap {
        int pos_col = -1;
        int neg_col = -1;   // >= 0 only for free variables
        double shift = 0.0;
    };
    std::vector<VarMap> var_map;
};

Standardized standardize(const LinearProgram& lp) {
    const std::size_t n = lp.num_variables();
    const std::size_t m = lp.constraints.size();

    Standardized s;
    s.var_map.resize(n);
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (lp.lower_bounds[j].has_value()) {
            s.var_map[j].pos_col = static_cast<int>(col++);
            s.var_map[j].shift = *lp.lower_bounds[j];
        } else {
            s.var_map[j].pos_col = static_cast<int>(col++);
            s.var_map[j].neg_col = static_cast<int>(col++);
        }
    }
    const std::size_t n_struct = col;

    // Count slack and artificial columns after rhs normalization.
    std::vector<double> row_rhs(m);
    std::vector<Relation> row_rel(m);
    std::vector<int> row_sign(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = lp.constraints[i];
        double r = c.rhs;
        for (std::size_t j = 0; j < n; ++j) r -= c.coefficients[j] * s.var_map[j].shift;
        Relation rel = c.relation;
        if (r < 0.0) {
            row_sign[i] = -1;
            r = -r;
            if (rel == Relation::LessEqual) rel = Relation::GreaterEqual;
            else if (rel == Relation::GreaterEqual) rel = Relation::LessEqual;
        }
        row_rhs[i] = r;
        row_rel[i] = rel;
    }

    std::size_t n_slack = 0;
    std::size_t n_art = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (row_rel[i] != Relation::Equal) ++n_slack;
        if (row_rel[i] != Relation::LessEqual) ++n_art;
    }

    s.cols = n_struct + n_slack + n_art;
    s.first_artificial = n_struct + n_slack;
    s.a.assign(m, std::vector<double>(s.cols, 0.0));
    s.rhs = row_rhs;
    s.cost.assign(s.cols, 0.0);
    s.basis.assign(m, -1);

    for (std::size_t j = 0; j < n; ++j) {
        s.cost[static_cast<std::size_t>(s.var_map[j].pos_col)] = lp.objective[j];
        if (s.var_map[j].neg_col >= 0) {
            s.cost[static_cast<std::size_t>(s.var_map[j].neg_col)] = -lp.objective[j];
        }
    }

    std::size_t slack_col = n_struct;
    std::size_t art_col = s.first_artificial;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = lp.constraints[i];
        for (std::size_t j = 0; j < n; ++j) {
            double v = row_sign[i] * c.coefficients[j];
            s.a[i][static_cast<std::size_t>(s.var_map[j].pos_col)] += v;
            if (s.var_map[j].neg_col >= 0) {
                s.a[i][static_cast<std::size_t>(s.var_map[j].neg_col)] -= v;
            }
        }
        switch (row_rel[i]) {
            case Relation::LessEqual:
                s.a[i][slack_col] = 1.0;
                s.basis[i] = static_cast<int>(slack_col);
                ++slack_col;
                break;
            case Relation::GreaterEqual:
                s.a[i][slack_col] = -1.0;
                ++slack_col;
                s.a[i][art_col] = 1.0;
                s.basis[i] = static_cast<int>(art_col);
                ++art_col;
                break;
            case Relation::Equal:
                s.a[i][art_col] = 1.0;
                s.basis[i] = static_cast<int>(art_col);
                ++art_col;
                break;
        }
    }
    return s;
}

// Reduced costs d_j = cost_j - cost_B . B^-1 A_j against the current basis,
// and z = current objective, computed directly from the tableau.
void price(const Standardized& s, const std::vector<double>& cost,
           std::vector<double>& d, double& z) {
    const std::size_t m = s.a.size();
    d = cost;
    z = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double cb = cost[static_cast<std::size_t>(s.basis[i])];
        if (cb == 0.0) continue;
        z += cb * s.rhs[i];
        for (std::size_t j = 0; j < s.cols; ++j) d[j] -= cb * s.a[i][j];
    }
}

void pivot(Standardized& s, std::vector<double>& d, double& z,
           std::size_t row, std::size_t col) {
    const std::size_t m = s.a.size();
    double pv = s.a[row][col];
    for (std::size_t j = 0; j < s.cols; ++j) s.a[row][j] /= pv;
    s.rhs[row] /= pv;
    s.a[row][col] = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
        if (i == row) continue;
        double f = s.a[i][col];
        if (f == 0.0) continue;
        for (std::size_t j = 0; j < s.cols; ++j) s.a[i][j] -= f * s.a[row][j];
        s.a[i][col] = 0.0;
        s.rhs[i] -= f * s.rhs[row];
        if (s.rhs[i] < 0.0) s.rhs[i] = 0.0;  // clamp roundoff
    }
    double f = d[col];
    if (f != 0.0) {
        z += f * s.rhs[row];
        for (std::size_t j = 0; j < s.cols; ++j) d[j] -= f * s.a[row][j];
        d[col] = 0.0;
    }
    s.basis[row] = static_cast<int>(col);
}

enum class PhaseOutcome { Optimal, Unbounded, IterationCap };

// Bland's rule: entering = lowest-index column with negative reduced cost;
// leaving = min-ratio row, ties broken by lowest basic column index.
PhaseOutcome run_phase(Standardized& s, std::vector<double>& d, double& z,
                       std::size_t allowed_cols, const SolverOptions& opt,
                       int& iterations, int cap) {
    const std::size_t m = s.a.size();
    for (;;) {
        std::size_t enter = allowed_cols;
        for (std::size_t j = 0; j < allowed_cols; ++j) {
            if (d[j] < -opt.feasibility_tol) {
                enter = j;
                break;
            }
        }
        if (enter == allowed_cols) return PhaseOutcome::Optimal;

        std::size_t leave = m;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            double aij = s.a[i][enter];
            if (aij <= opt.pivot_tol) continue;
            double ratio = s.rhs[i] / aij;
            if (ratio < best_ratio - 1e-12 ||
                (ratio < best_ratio + 1e-12 && leave < m && s.basis[i] < s.basis[leave])) {
                best_ratio = ratio;
                leave = i;
            }
        }
        if (leave == m) return PhaseOutcome::Unbounded;

        if (++iterations > cap) return PhaseOutcome::IterationCap;
        pivot(s, d, z, leave, enter);
    }
}

// After phase 1, pivot every still-basic artificial out on the largest
// eligible non-artificial element; rows with none are dependent and dropped.
void remove_artificials(Standardized& s, const SolverOptions& opt) {
    for (std::size_t i = 0; i < s.a.size();) {
        if (static_cast<std::size_t>(s.basis[i]) < s.first_artificial) {
            ++i;
            continue;
        }
        std::size_t best_col = s.first_artificial;
        double best_abs = opt.pivot_tol;
        for (std::size_t j = 0; j < s.first_artificial; ++j) {
            if (std::abs(s.a[i][j]) > best_abs) {
                best_abs = std::abs(s.a[i][j]);
                best_col = j;
            }
        }
        if (best_col < s.first_artificial) {
            std::vector<double> dummy(s.cols, 0.0);
            double zd = 0.0;
            pivot(s, dummy, zd, i, best_col);
            ++i;
        } else {
            s.a.erase(s.a.begin() + static_cast<std::ptrdiff_t>(i));
            s.rhs.erase(s.rhs.begin() + static_cast<std::ptrdiff_t>(i));
            s.basis.erase(s.basis.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }
}

}  // namespace

void LinearProgram::validate() const {
    const std::size_t n = objective.size();
    if (n == 0) throw std::invalid_argument("LinearProgram: no variables");
    for (double c : objective) {
        if (!std::isfinite(c)) throw std::invalid_argument("LinearProgram: non-finite objective");
    }
    if (!std::isfinite(constant_term)) {
        throw std::invalid_argument("LinearProgram: non-finite constant term");
    }
    if (lower_bounds.size() != n) {
        throw std::invalid_argument("LinearProgram: lower_bounds size " +
                                    std::to_string(lower_bounds.size()) + " != variable count " +
                                    std::to_string(n));
    }
    for (const auto& b : lower_bounds) {
        if (b.has_value() && !std::isfinite(*b)) {
            throw std::invalid_argument("LinearProgram: non-finite lower bound");
        }
    }
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        const auto& c = constraints[i];
        if (c.coefficients.size() != n) {
            throw std::invalid_argument("LinearProgram: constraint " + std::to_string(i) +
                                        " has " + std::to_string(c.coefficients.size()) +
                                        " coefficients, expected " + std::to_string(n));
        }
        for (double v : c.coefficients) {
            if (!std::isfinite(v)) {
                throw std::invalid_argument("LinearProgram: non-finite coefficient in constraint " +
                                            std::to_string(i));
            }
        }
        if (!std::isfinite(c.rhs)) {
            throw std::invalid_argument("LinearProgram: non-finite rhs in constraint " +
                                        std::to_string(i));
        }
    }
}

std::string LinearProgram::to_text() const {
    std::string out = "minimize: ";
    for (std::size_t j = 0; j < objective.size(); ++j) {
        if (j > 0) out += " + ";
        append_double(out, objective[j]);
        out += " x" + std::to_string(j);
    }
    if (constant_term != 0.0) {
        out += " + ";
        append_double(out, constant_term);
    }
    out += "\nsubject to:\n";
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        const auto& c = constraints[i];
        out += "  r" + std::to_string(i) + ":";
        for (std::size_t j = 0; j < c.coefficients.size(); ++j) {
            if (c.coefficients[j] == 0.0) continue;
            out += " ";
            if (c.coefficients[j] >= 0.0) out += "+";
            append_double(out, c.coefficients[j]);
            out += " x" + std::to_string(j);
        }
        switch (c.relation) {
            case Relation::LessEqual: out += " <= "; break;
            case Relation::Equal: out += " = "; break;
            case Relation::GreaterEqual: out += " >= "; break;
        }
        append_double(out, c.rhs);
        out += "\n";
    }
    out += "bounds:\n";
    for (std::size_t j = 0; j < lower_bounds.size(); ++j) {
        out += "  x" + std::to_string(j);
        if (lower_bounds[j].has_value()) {
            out += " >= ";
            append_double(out, *lower_bounds[j]);
        } else {
            out += " free";
        }
        out += "\n";
    }
    return out;
}

LpSolution solve(const LinearProgram& lp, const SolverOptions& opt) {
    lp.validate();

    Standardized s = standardize(lp);
    const std::size_t m = s.a.size();
    const int cap = opt.iteration_cap_factor *
                    static_cast<int>((m + s.cols) * (m + s.cols));

    LpSolution sol;
    sol.iterations = 0;

    // Phase 1: minimize the artificial sum to reach a basic feasible point.
    if (s.first_artificial < s.cols) {
        std::vector<double> phase1_cost(s.cols, 0.0);
        for (std::size_t j = s.first_artificial; j < s.cols; ++j) phase1_cost[j] = 1.0;
        std::vector<double> d;
        double z = 0.0;
        price(s, phase1_cost, d, z);
        PhaseOutcome out = run_phase(s, d, z, s.cols, opt, sol.iterations, cap);
        if (out == PhaseOutcome::IterationCap) {
            throw std::runtime_error("simplex: iteration cap exceeded in phase 1");
        }
        if (out == PhaseOutcome::Unbounded) {
            throw std::runtime_error("simplex: phase 1 unbounded (internal error)");
        }
        double max_rhs = 1.0;
        for (double r : s.rhs) max_rhs = std::max(max_rhs, std::abs(r));
        if (z > opt.feasibility_tol * static_cast<double>(m + 1) * max_rhs) {
            sol.status = SolveStatus::Infeasible;
            return sol;
        }
        remove_artificials(s, opt);
    }

    // Phase 2: original objective from the feasible basis.
    {
        std::vector<double> d;
        double z = 0.0;
        price(s, s.cost, d, z);
        PhaseOutcome out = run_phase(s, d, z, s.first_artificial, opt, sol.iterations, cap);
        if (out == PhaseOutcome::IterationCap) {
            throw std::runtime_error("simplex: iteration cap exceeded in phase 2");
        }
        if (out == PhaseOutcome::Unbounded) {
            sol.status = SolveStatus::Unbounded;
            return sol;
        }
    }

    std::vector<double> x_std(s.cols, 0.0);
    for (std::size_t i = 0; i < s.a.size(); ++i) {
        x_std[static_cast<std::size_t>(s.basis[i])] = s.rhs[i];
    }

    const std::size_t n = lp.num_variables();
    sol.variable_values.resize(n);
    sol.objective_value = lp.constant_term;
    for (std::size_t j = 0; j < n; ++j) {
        double v = x_std[static_cast<std::size_t>(s.var_map[j].pos_col)] + s.var_map[j].shift;
        if (s.var_map[j].neg_col >= 0) {
            v -= x_std[static_cast<std::size_t>(s.var_map[j].neg_col)];
        }
        sol.variable_values[j] = v;
        sol.objective_value += lp.objective[j] * v;
    }
    sol.status = SolveStatus::Optimal;
    return sol;
}

}  // namespace ifdea
