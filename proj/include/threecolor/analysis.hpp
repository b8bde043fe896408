#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace threecolor {

/// Reductions in instance size, one per branch, all positive.
struct BranchVector {
    std::vector<double> reductions;
};

/// Largest zero of f(x) = 1 - sum_i x^(-r_i): the growth rate of the branch
/// tree. Exactly 1 for a single branch; otherwise found by bisection on
/// [1+eps, k^(1/min r) + 1] to absolute tolerance 1e-9.
double work_factor(const BranchVector& bv);

/// (sum_i c_i * base^(e_i))^(1/vertices): the per-vertex rate of an
/// enumeration that spends c_i * base^(e_i) leaves over `vertices` vertices.
double rate(double base, const std::vector<std::pair<double, double>>& terms,
            double vertices);

struct LpRow {
    std::vector<double> coeffs;
    enum class Relation { LessEq, Eq } relation = Relation::LessEq;
    double rhs = 0.0;
};

/// Maximize objective . x subject to rows, x >= 0.
struct LpModel {
    std::vector<std::string> variable_names;
    std::vector<double> objective;
    std::vector<LpRow> rows;

    std::size_t index_of(const std::string& name) const;
};

struct AnalysisReport {
    std::map<std::string, double> values;  // decision variables + Nstar/Ustar
    double objective = 0.0;
    double base = 0.0;  // exp(objective)
    double max_violation = 0.0;  // primal/dual certificate residual
    bool exact_verified = false;  // basic solution re-checked in rationals
    std::vector<double> duals;
};

/// The worst-case linear program over the partition fractions, normalized
/// to one vertex. 25 decision variables; the two enumeration-cost
/// aggregates Nstar and Ustar are derived rows of the report.
LpModel build_lp();

/// Dense two-phase simplex with Bland's rule; throws on infeasible or
/// unbounded models (either would mean the model is mis-transcribed).
AnalysisReport solve_lp(const LpModel& m);

}  // namespace threecolor
