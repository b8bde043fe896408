#include "threecolor/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace threecolor {

double work_factor(const BranchVector& bv) {
    const auto& rs = bv.reductions;
    if (rs.empty()) throw std::invalid_argument("empty branch vector");
    for (double r : rs)
        if (!(r > 0)) throw std::invalid_argument("non-positive reduction");
    if (rs.size() == 1) return 1.0;

    auto f = [&](double x) {
        double s = 0.0;
        for (double r : rs) s += std::pow(x, -r);
        return 1.0 - s;
    };
    const double rmin = *std::min_element(rs.begin(), rs.end());
    double lo = 1.0 + 1e-12;
    double hi = std::pow(static_cast<double>(rs.size()), 1.0 / rmin) + 1.0;
    // f is increasing for x > 1, negative at lo, positive at hi.
    for (int it = 0; it < 200 && hi - lo > 1e-9; ++it) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double rate(double base, const std::vector<std::pair<double, double>>& terms,
            double vertices) {
    if (!(vertices > 0)) throw std::invalid_argument("vertex count must be positive");
    double s = 0.0;
    for (const auto& [c, e] : terms) {
        if (!(c > 0)) throw std::invalid_argument("term coefficients must be positive");
        s += c * std::pow(base, e);
    }
    return std::pow(s, 1.0 / vertices);
}

std::size_t LpModel::index_of(const std::string& name) const {
    auto it = std::find(variable_names.begin(), variable_names.end(), name);
    if (it == variable_names.end()) throw std::invalid_argument("unknown variable " + name);
    return static_cast<std::size_t>(it - variable_names.begin());
}

LpModel build_lp() {
    LpModel m;
    auto add_var = [&](const std::string& n) { m.variable_names.push_back(n); };
    add_var("R");
    add_var("I");
    add_var("L");
    add_var("N");
    add_var("U");
    add_var("N1");
    add_var("N2");
    add_var("N3");
    for (int i = 1; i <= 8; ++i) add_var("N3_" + std::to_string(i));
    for (int j = 0; j <= 7; ++j) add_var("U" + std::to_string(j));
    add_var("Uprime");
    const std::size_t n = m.variable_names.size();  // 25

    auto row = [&](LpRow::Relation rel, double rhs) {
        LpRow r;
        r.coeffs.assign(n, 0.0);
        r.relation = rel;
        r.rhs = rhs;
        m.rows.push_back(r);
        return m.rows.size() - 1;
    };
    auto set = [&](std::size_t ri, const std::string& v, double c) {
        m.rows[ri].coeffs[m.index_of(v)] = c;
    };

    // 4R + 2I <= L
    std::size_t r1 = row(LpRow::Relation::LessEq, 0);
    set(r1, "R", 4);
    set(r1, "I", 2);
    set(r1, "L", -1);
    // N1 + 2 N2 + N3 <= 2 L
    std::size_t r2 = row(LpRow::Relation::LessEq, 0);
    set(r2, "N1", 1);
    set(r2, "N2", 2);
    set(r2, "N3", 1);
    set(r2, "L", -2);
    // Uprime >= (1/5) N3_5 + (2/6) N3_6 + (5/7) N3_7 + N3_8
    std::size_t r3 = row(LpRow::Relation::LessEq, 0);
    set(r3, "N3_5", 1.0 / 5.0);
    set(r3, "N3_6", 2.0 / 6.0);
    set(r3, "N3_7", 5.0 / 7.0);
    set(r3, "N3_8", 1.0);
    set(r3, "Uprime", -1.0);
    // sum_j (10-j)/(8-j) Uj <= 2 N2 + 3 N3 - 3 Uprime
    std::size_t r4 = row(LpRow::Relation::LessEq, 0);
    for (int j = 0; j <= 7; ++j)
        set(r4, "U" + std::to_string(j), static_cast<double>(10 - j) / (8 - j));
    set(r4, "N2", -2);
    set(r4, "N3", -3);
    set(r4, "Uprime", 3);
    // sum_i (8/i) N3_i <= 8 R
    std::size_t r5 = row(LpRow::Relation::LessEq, 0);
    for (int i = 1; i <= 8; ++i)
        set(r5, "N3_" + std::to_string(i), 8.0 / i);
    set(r5, "R", -8);
    // R + I + L + N + U = 1
    std::size_t e1 = row(LpRow::Relation::Eq, 1);
    for (const char* v : {"R", "I", "L", "N", "U"}) set(e1, v, 1);
    // N1 + N2 + N3 = N
    std::size_t e2 = row(LpRow::Relation::Eq, 0);
    set(e2, "N1", 1);
    set(e2, "N2", 1);
    set(e2, "N3", 1);
    set(e2, "N", -1);
    // sum_i N3_i = N3
    std::size_t e3 = row(LpRow::Relation::Eq, 0);
    for (int i = 1; i <= 8; ++i) set(e3, "N3_" + std::to_string(i), 1);
    set(e3, "N3", -1);
    // sum_j Uj + Uprime = U
    std::size_t e4 = row(LpRow::Relation::Eq, 0);
    for (int j = 0; j <= 7; ++j) set(e4, "U" + std::to_string(j), 1);
    set(e4, "Uprime", 1);
    set(e4, "U", -1);

    // Objective: log 3 R + log 2 I + log 1.36443 Nstar + log 1.34004 Ustar
    // with Nstar = N - (3/5) N3_5 - N3_6 - N3_7 - N3_8 and
    // Ustar = U + (3/5) N3_5 + N3_6 substituted in.
    m.objective.assign(n, 0.0);
    const double lc = std::log(3.0);
    const double li = std::log(2.0);
    const double ln = std::log(1.36443);
    const double lu = std::log(1.34004);
    m.objective[m.index_of("R")] = lc;
    m.objective[m.index_of("I")] = li;
    m.objective[m.index_of("N")] = ln;
    m.objective[m.index_of("U")] = lu;
    m.objective[m.index_of("N3_5")] = (3.0 / 5.0) * (lu - ln);
    m.objective[m.index_of("N3_6")] = lu - ln;
    m.objective[m.index_of("N3_7")] = -ln;
    m.objective[m.index_of("N3_8")] = -ln;
    return m;
}

namespace {

constexpr double kPivotTol = 1e-9;

// Dense tableau simplex, Bland's rule throughout. Columns: structural,
// slacks (inequalities), artificials (equalities). Two phases.
struct Simplex {
    std::size_t n_struct, n_slack, n_art, cols, rows;
    std::vector<std::vector<double>> a;  // rows x cols
    std::vector<double> b;
    std::vector<std::size_t> basis;  // column basic in each row

    explicit Simplex(const LpModel& m) {
        rows = m.rows.size();
        n_struct = m.variable_names.size();
        n_slack = 0;
        n_art = 0;
        for (const auto& r : m.rows)
            (r.relation == LpRow::Relation::LessEq ? n_slack : n_art) += 1;
        cols = n_struct + n_slack + n_art;
        a.assign(rows, std::vector<double>(cols, 0.0));
        b.assign(rows, 0.0);
        basis.assign(rows, 0);

        std::size_t slack_at = n_struct;
        std::size_t art_at = n_struct + n_slack;
        for (std::size_t i = 0; i < rows; ++i) {
            const auto& r = m.rows[i];
            for (std::size_t j = 0; j < n_struct; ++j) a[i][j] = r.coeffs[j];
            b[i] = r.rhs;
            if (b[i] < 0) {  // keep rhs non-negative
                for (auto& x : a[i]) x = -x;
                b[i] = -b[i];
            }
            if (r.relation == LpRow::Relation::LessEq && r.rhs >= 0) {
                a[i][slack_at] = 1.0;
                basis[i] = slack_at++;
            } else {
                if (r.relation == LpRow::Relation::LessEq) a[i][slack_at++] = -1.0;
                a[i][art_at] = 1.0;
                basis[i] = art_at++;
            }
        }
        n_art = art_at - (n_struct + n_slack);
        cols = n_struct + n_slack + n_art;
        for (auto& rrow : a) rrow.resize(cols);
    }

    void pivot(std::size_t pr, std::size_t pc) {
        double p = a[pr][pc];
        for (auto& x : a[pr]) x /= p;
        b[pr] /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr || std::abs(a[i][pc]) < kPivotTol) continue;
            double f = a[i][pc];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[pr][j];
            b[i] -= f * b[pr];
        }
    }

    // Maximize obj over allowed columns; returns false on unbounded.
    bool run(const std::vector<double>& obj, const std::vector<bool>& allowed) {
        for (;;) {
            std::vector<double> reduced(cols, 0.0);
            std::vector<double> y(rows, 0.0);
            for (std::size_t i = 0; i < rows; ++i) y[i] = obj[basis[i]];
            for (std::size_t j = 0; j < cols; ++j) {
                if (!allowed[j]) continue;
                double d = obj[j];
                for (std::size_t i = 0; i < rows; ++i) d -= y[i] * a[i][j];
                reduced[j] = d;
            }
            std::size_t enter = cols;
            for (std::size_t j = 0; j < cols; ++j) {  // Bland: smallest index
                if (allowed[j] && reduced[j] > kPivotTol) {
                    enter = j;
                    break;
                }
            }
            if (enter == cols) return true;
            std::size_t leave = rows;
            double best = 0.0;
            for (std::size_t i = 0; i < rows; ++i) {
                if (a[i][enter] <= kPivotTol) continue;
                double ratio = b[i] / a[i][enter];
                if (leave == rows || ratio < best - kPivotTol ||
                    (std::abs(ratio - best) <= kPivotTol && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows) return false;
            pivot(leave, enter);
            basis[leave] = enter;
        }
    }
};

// Exact re-check of the final basis with long-long rationals; returns false
// when arithmetic overflows or the basic solution disagrees.
struct Rat {
    long long num = 0, den = 1;
};

long long checked_mul(long long x, long long y) {
    __int128 p = static_cast<__int128>(x) * y;
    if (p > INT64_MAX || p < INT64_MIN) throw std::overflow_error("rational overflow");
    return static_cast<long long>(p);
}

Rat normalize(Rat r) {
    if (r.den < 0) {
        r.num = -r.num;
        r.den = -r.den;
    }
    long long g = std::gcd(std::abs(r.num), r.den);
    if (g > 1) {
        r.num /= g;
        r.den /= g;
    }
    return r;
}

Rat add(Rat x, Rat y) {
    return normalize({checked_mul(x.num, y.den) + checked_mul(y.num, x.den),
                      checked_mul(x.den, y.den)});
}
Rat sub(Rat x, Rat y) { return add(x, {-y.num, y.den}); }
Rat mul(Rat x, Rat y) { return normalize({checked_mul(x.num, y.num), checked_mul(x.den, y.den)}); }
Rat divide(Rat x, Rat y) {
    if (y.num == 0) throw std::overflow_error("rational division by zero");
    return normalize({checked_mul(x.num, y.den), checked_mul(x.den, y.num)});
}

Rat to_rat(double v) {
    // Model coefficients are small fractions; denominator 2520 covers them.
    const long long den = 2520;
    double scaled = v * static_cast<double>(den);
    long long num = std::llround(scaled);
    if (std::abs(scaled - static_cast<double>(num)) > 1e-6)
        throw std::overflow_error("coefficient is not a small rational");
    return normalize({num, den});
}

bool exact_recheck(const LpModel& m, const std::vector<std::size_t>& basis,
                   std::size_t n_struct, std::size_t n_slack,
                   const std::vector<double>& x) {
    try {
        const std::size_t rows = m.rows.size();
        // Column j of the basis matrix in rationals.
        auto column = [&](std::size_t col, std::size_t row) -> Rat {
            if (col < n_struct) return to_rat(m.rows[row].coeffs[col]);
            std::size_t s = n_struct;
            for (std::size_t i = 0; i < rows; ++i) {
                if (m.rows[i].relation != LpRow::Relation::LessEq) continue;
                if (s == col) return {i == row ? 1 : 0, 1};
                ++s;
            }
            return {0, 1};  // artificial columns never stay basic here
        };
        std::vector<std::vector<Rat>> mat(rows, std::vector<Rat>(rows + 1));
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < rows; ++j) mat[i][j] = column(basis[j], i);
            mat[i][rows] = to_rat(m.rows[i].rhs);
        }
        // Gaussian elimination.
        for (std::size_t c = 0; c < rows; ++c) {
            std::size_t piv = c;
            while (piv < rows && mat[piv][c].num == 0) ++piv;
            if (piv == rows) return false;
            std::swap(mat[piv], mat[c]);
            Rat inv = mat[c][c];
            for (std::size_t j = c; j <= rows; ++j) mat[c][j] = divide(mat[c][j], inv);
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == c || mat[i][c].num == 0) continue;
                Rat f = mat[i][c];
                for (std::size_t j = c; j <= rows; ++j)
                    mat[i][j] = sub(mat[i][j], mul(f, mat[c][j]));
            }
        }
        for (std::size_t i = 0; i < rows; ++i) {
            Rat xb = mat[i][rows];
            if (xb.num < 0) return false;  // basic solution must be feasible
            double approx = static_cast<double>(xb.num) / static_cast<double>(xb.den);
            std::size_t col = basis[i];
            double expect = col < n_struct + n_slack && col < x.size() ? x[col] : 0.0;
            if (std::abs(approx - expect) > 1e-7) return false;
        }
        return true;
    } catch (const std::overflow_error&) {
        return false;
    }
}

}  // namespace

AnalysisReport solve_lp(const LpModel& m) {
    Simplex s(m);
    const std::size_t n_struct = s.n_struct, n_slack = s.n_slack, n_art = s.n_art;
    const std::size_t cols = s.cols;

    // Phase 1: drive artificials out.
    if (n_art > 0) {
        std::vector<double> obj(cols, 0.0);
        for (std::size_t j = n_struct + n_slack; j < cols; ++j) obj[j] = -1.0;
        std::vector<bool> allowed(cols, true);
        if (!s.run(obj, allowed)) throw std::runtime_error("phase 1 unbounded");
        double inf = 0.0;
        for (std::size_t i = 0; i < s.rows; ++i)
            if (s.basis[i] >= n_struct + n_slack) inf += s.b[i];
        if (inf > 1e-7) throw std::runtime_error("model infeasible");
        // Pivot any artificial still basic at zero out of the basis.
        for (std::size_t i = 0; i < s.rows; ++i) {
            if (s.basis[i] < n_struct + n_slack) continue;
            for (std::size_t j = 0; j < n_struct + n_slack; ++j) {
                if (std::abs(s.a[i][j]) > kPivotTol) {
                    s.pivot(i, j);
                    s.basis[i] = j;
                    break;
                }
            }
        }
    }

    // Phase 2.
    std::vector<double> obj(cols, 0.0);
    for (std::size_t j = 0; j < n_struct; ++j) obj[j] = m.objective[j];
    std::vector<bool> allowed(cols, true);
    for (std::size_t j = n_struct + n_slack; j < cols; ++j) allowed[j] = false;
    if (!s.run(obj, allowed)) throw std::runtime_error("model unbounded");

    std::vector<double> x(n_struct + n_slack, 0.0);
    for (std::size_t i = 0; i < s.rows; ++i)
        if (s.basis[i] < x.size()) x[s.basis[i]] = s.b[i];

    AnalysisReport rep;
    for (std::size_t j = 0; j < n_struct; ++j) rep.values[m.variable_names[j]] = x[j];
    rep.objective = 0.0;
    for (std::size_t j = 0; j < n_struct; ++j) rep.objective += m.objective[j] * x[j];
    rep.base = std::exp(rep.objective);

    auto at = [&](const std::string& name) { return rep.values.at(name); };
    rep.values["Nstar"] = at("N") - (3.0 / 5.0) * at("N3_5") - at("N3_6") - at("N3_7") -
                          at("N3_8");
    rep.values["Ustar"] = at("U") + (3.0 / 5.0) * at("N3_5") + at("N3_6");

    // Certificate: primal residuals and dual feasibility from the final
    // reduced costs.
    double viol = 0.0;
    for (const auto& r : m.rows) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < n_struct; ++j) lhs += r.coeffs[j] * x[j];
        if (r.relation == LpRow::Relation::LessEq)
            viol = std::max(viol, lhs - r.rhs);
        else
            viol = std::max(viol, std::abs(lhs - r.rhs));
    }
    for (std::size_t j = 0; j < n_struct; ++j) viol = std::max(viol, -x[j]);
    {
        std::vector<double> y(s.rows, 0.0);
        for (std::size_t i = 0; i < s.rows; ++i) y[i] = obj[s.basis[i]];
        rep.duals.assign(s.rows, 0.0);
        for (std::size_t j = 0; j < cols; ++j) {
            if (!allowed[j]) continue;
            double d = obj[j];
            for (std::size_t i = 0; i < s.rows; ++i) d -= y[i] * s.a[i][j];
            viol = std::max(viol, d);  // no improving column may remain
        }
        // Duals via the slack reduced costs (one per inequality row).
        std::size_t slack_col = n_struct;
        for (std::size_t i = 0; i < m.rows.size(); ++i) {
            if (m.rows[i].relation != LpRow::Relation::LessEq) continue;
            double d = 0.0;
            for (std::size_t r2 = 0; r2 < s.rows; ++r2) d += y[r2] * s.a[r2][slack_col];
            rep.duals[i] = d;
            ++slack_col;
        }
    }
    rep.max_violation = viol;
    rep.exact_verified = exact_recheck(m, s.basis, n_struct, n_slack, x);
    return rep;
}

}  // namespace threecolor
