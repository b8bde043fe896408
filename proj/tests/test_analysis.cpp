#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "threecolor/analysis.hpp"

using namespace threecolor;

namespace {

// Evaluate a model row on a named point; unset names count as zero.
double eval_row(const LpModel& m, const LpRow& row, const std::map<std::string, double>& x) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.variable_names.size(); ++j) {
        auto it = x.find(m.variable_names[j]);
        if (it != x.end()) s += row.coeffs[j] * it->second;
    }
    return s;
}

std::map<std::string, double> table_point() {
    return {{"R", 0.0396825},  {"L", 0.1587302},  {"N", 0.2777778}, {"U", 0.5238095},
            {"N2", 0.0396825}, {"N3", 0.2380952}, {"N3_6", 0.2380952},
            {"U0", 0.4444444}, {"Uprime", 0.0793651}};
}

}  // namespace

TEST_CASE("work factors") {
    CHECK(work_factor({{1, 1}}) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(work_factor({{2, 6, 6}}) == doctest::Approx(1.3022).epsilon(5e-4));
    CHECK(work_factor({{1}}) == 1.0);
    CHECK_THROWS_AS(work_factor({{}}), std::invalid_argument);
    CHECK_THROWS_AS(work_factor({{2, -1}}), std::invalid_argument);
}

TEST_CASE("work factor is strictly decreasing in every reduction") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t k = 2 + rng() % 4;
        std::vector<double> rs;
        for (std::size_t i = 0; i < k; ++i)
            rs.push_back(1.0 + static_cast<double>(rng() % 600) / 100.0);
        double before = work_factor({rs});
        std::size_t bump = rng() % k;
        rs[bump] += 0.5 + static_cast<double>(rng() % 100) / 100.0;
        double after = work_factor({rs});
        CHECK(after < before - 1e-12);
    }
}

TEST_CASE("equal reductions collapse to the closed form") {
    for (std::size_t k = 2; k <= 5; ++k)
        for (double r : {1.0, 2.0, 3.5}) {
            std::vector<double> rs(k, r);
            CHECK(work_factor({rs}) ==
                  doctest::Approx(std::pow(double(k), 1.0 / r)).epsilon(1e-7));
        }
}

TEST_CASE("per-vertex rates") {
    CHECK(rate(1.36443, {{3, 4}}, 8) == doctest::Approx(1.34003).epsilon(1e-4));
    CHECK(rate(1.36443, {{3, 4}}, 8) < 1.34004);
    CHECK(rate(1.36443, {{3, 2}, {6, 1}}, 9) == doctest::Approx(1.33830).epsilon(1e-4));
    CHECK(rate(1.36443, {{3, 2}, {6, 1}}, 9) < 1.338302);
    CHECK(rate(3.0, {{1, 1}}, 1) == doctest::Approx(3.0));
    CHECK_THROWS_AS(rate(2.0, {{1, 1}}, 0), std::invalid_argument);
}

TEST_CASE("the model has 25 decision variables") {
    CHECK(build_lp().variable_names.size() == 25);
}

TEST_CASE("the zero point violates only the total-size equality") {
    LpModel m = build_lp();
    std::map<std::string, double> zero;
    int violated = 0;
    for (const auto& row : m.rows) {
        double lhs = eval_row(m, row, zero);
        bool ok = row.relation == LpRow::Relation::LessEq ? lhs <= row.rhs + 1e-12
                                                          : std::abs(lhs - row.rhs) <= 1e-12;
        if (!ok) ++violated;
    }
    CHECK(violated == 1);
}

TEST_CASE("the reported worst-case point is feasible") {
    LpModel m = build_lp();
    auto x = table_point();
    for (const auto& row : m.rows) {
        double lhs = eval_row(m, row, x);
        if (row.relation == LpRow::Relation::LessEq)
            CHECK(lhs <= row.rhs + 1e-6);
        else
            CHECK(lhs == doctest::Approx(row.rhs).epsilon(1e-6));
    }
}

TEST_CASE("the solved program reproduces the reported optimum") {
    AnalysisReport rep = solve_lp(build_lp());
    CHECK(rep.values.at("R") == doctest::Approx(0.0396825).epsilon(1e-4));
    CHECK(rep.values.at("I") == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(rep.values.at("L") == doctest::Approx(0.1587302).epsilon(1e-4));
    CHECK(rep.values.at("N") == doctest::Approx(0.2777778).epsilon(1e-4));
    CHECK(rep.values.at("U") == doctest::Approx(0.5238095).epsilon(1e-4));
    CHECK(rep.values.at("N2") == doctest::Approx(0.0396825).epsilon(1e-4));
    CHECK(rep.values.at("N3_6") == doctest::Approx(0.2380952).epsilon(1e-4));
    CHECK(rep.values.at("U0") == doctest::Approx(0.4444444).epsilon(1e-4));
    CHECK(rep.values.at("Uprime") == doctest::Approx(0.0793651).epsilon(1e-4));
    CHECK(rep.values.at("Nstar") == doctest::Approx(0.0396825).epsilon(1e-4));
    CHECK(rep.values.at("Ustar") == doctest::Approx(0.7619048).epsilon(1e-4));
    CHECK(rep.base > 1.3216);
    CHECK(rep.base < 1.3218);
    CHECK(rep.max_violation <= 1e-7);
    CHECK(rep.exact_verified);

    // The reported point is the maximizer: the optimum cannot fall below its
    // objective and must not exceed it measurably.
    double table_obj = std::log(3.0) * 0.0396825 + std::log(1.36443) * 0.0396825 +
                       std::log(1.34004) * 0.7619048;
    CHECK(rep.objective >= table_obj - 1e-6);
    CHECK(rep.objective <= table_obj + 1e-4);
}

TEST_CASE("per-root accounting matches the program's answer") {
    CHECK(1 + 4 + 1 + 6 + 11.2 + 2 == doctest::Approx(25.2));
    CHECK(11.2 + 2 + 6 == doctest::Approx(19.2));
    double base = std::pow(3.0 * 1.36443 * std::pow(1.34004, 19.2), 1.0 / 25.2);
    AnalysisReport rep = solve_lp(build_lp());
    CHECK(base == doctest::Approx(rep.base).epsilon(1e-4));
}
