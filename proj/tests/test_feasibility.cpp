// Copyright (c) gozinta contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <optional>
#include <random>

#include "gozinta/feasibility.hpp"

using namespace gozinta;

namespace {

// Exact interval decision for single-variable systems; fully
// independent of the elimination solver.
bool interval_feasible(const std::vector<std::tuple<Rational, Rel, Rational>>& rows) {
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& [coeff, rel, rhs] : rows) {
        if (coeff.is_zero()) {
            if (rel == Rel::Less ? !(Rational(0) < rhs) : !(Rational(0) <= rhs)) return false;
            continue;
        }
        Rational bound = rhs / coeff;
        bool strict = rel == Rel::Less;
        if (coeff > Rational(0)) {
            if (!hi || bound < *hi) {
                hi = bound;
                hi_strict = strict;
            } else if (bound == *hi && strict) {
                hi_strict = true;
            }
        } else {
            if (!lo || bound > *lo) {
                lo = bound;
                lo_strict = strict;
            } else if (bound == *lo && strict) {
                lo_strict = true;
            }
        }
    }
    if (!lo || !hi) return true;
    if (*lo < *hi) return true;
    return *lo == *hi && !lo_strict && !hi_strict;
}

}  // namespace

TEST_CASE("cyclic strict contradiction is infeasible") {
    LinearSystem sys;
    auto x = sys.add_variable("x");
    auto y = sys.add_variable("y");
    sys.add_less(x, y);
    sys.add_less(y, x);
    CHECK_FALSE(solve(sys).feasible);
}

TEST_CASE("interior point of a strict interval") {
    LinearSystem sys;
    auto x = sys.add_variable("x");
    auto y = sys.add_variable("y");
    sys.add_lower_bound(x, Rational(1));
    sys.add_less(x, y);
    sys.add_upper_bound(y, Rational(2));
    auto r = solve(sys);
    REQUIRE(r.feasible);
    CHECK(check_witness(sys, r.assignment));
}

TEST_CASE("six-variable ascending chain") {
    LinearSystem sys;
    std::vector<std::size_t> v;
    for (const char* name : {"a1", "b1", "a2", "b2", "a3", "b3"})
        v.push_back(sys.add_variable(name));
    for (auto idx : v) sys.add_lower_bound(idx, Rational(1));
    for (std::size_t i = 0; i + 1 < v.size(); ++i) sys.add_less(v[i], v[i + 1]);
    auto r = solve(sys);
    REQUIRE(r.feasible);
    CHECK(check_witness(sys, r.assignment));
    // the known satisfying point checks out too
    std::vector<Rational> known_point{Rational(6), Rational(7), Rational(8),
                                      Rational(9), Rational(10), Rational(11)};
    CHECK(check_witness(sys, known_point));
    // all-equal fails a strict chain
    std::vector<Rational> equal_point(6, Rational(6));
    CHECK_FALSE(check_witness(sys, equal_point));
}

TEST_CASE("check_witness validates coverage") {
    LinearSystem sys;
    sys.add_variable("x");
    sys.add_variable("y");
    CHECK_THROWS_WITH_AS((void)check_witness(sys, {Rational(1)}),
                         doctest::Contains("MissingVariable"), Error);
}

TEST_CASE("undeclared variable is malformed") {
    LinearSystem sys;
    sys.add_variable("x");
    CHECK_THROWS_WITH_AS(sys.add_constraint({{5, Rational(1)}}, Rel::Less, Rational(0)),
                         doctest::Contains("MalformedSystem"), Error);
}

TEST_CASE("equalities via opposing non-strict rows") {
    LinearSystem sys;
    auto x = sys.add_variable("x");
    auto y = sys.add_variable("y");
    sys.add_constraint({{x, Rational(1)}, {y, Rational(-1)}}, Rel::LessEq, Rational(0));
    sys.add_constraint({{x, Rational(-1)}, {y, Rational(1)}}, Rel::LessEq, Rational(0));
    sys.add_lower_bound(x, Rational(3));
    sys.add_upper_bound(y, Rational(3));
    auto r = solve(sys);
    REQUIRE(r.feasible);
    CHECK(r.assignment[x] == Rational(3));
    CHECK(r.assignment[y] == Rational(3));

    sys.add_less(x, y);  // x < y contradicts x == y
    CHECK_FALSE(solve(sys).feasible);
}

TEST_CASE("1-variable systems match the interval oracle") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<std::int64_t> coeff(-4, 4);
    std::uniform_int_distribution<std::int64_t> rhs(-12, 12);
    std::uniform_int_distribution<int> rel(0, 1);
    std::uniform_int_distribution<int> rows(1, 5);
    for (int round = 0; round < 2000; ++round) {
        LinearSystem sys;
        auto x = sys.add_variable("x");
        std::vector<std::tuple<Rational, Rel, Rational>> plain;
        int m = rows(rng);
        for (int i = 0; i < m; ++i) {
            Rational c(coeff(rng));
            Rel r = rel(rng) ? Rel::Less : Rel::LessEq;
            Rational b(rhs(rng), 1 + (round % 3));
            sys.add_constraint({{x, c}}, r, b);
            plain.emplace_back(c, r, b);
        }
        auto result = solve(sys);
        CHECK(result.feasible == interval_feasible(plain));
        if (result.feasible) CHECK(check_witness(sys, result.assignment));
    }
}

TEST_CASE("systems built around an interior point are feasible") {
    std::mt19937_64 rng(5678);
    std::uniform_int_distribution<std::int64_t> val(-6, 6);
    std::uniform_int_distribution<std::int64_t> coeff(-3, 3);
    std::uniform_int_distribution<std::int64_t> slackv(0, 5);
    std::uniform_int_distribution<int> nvars(1, 4), rows(1, 7), rel(0, 1);
    for (int round = 0; round < 1500; ++round) {
        const int n = nvars(rng);
        std::vector<Rational> point;
        for (int i = 0; i < n; ++i) point.emplace_back(val(rng), 1 + (round % 2));
        LinearSystem sys;
        for (int i = 0; i < n; ++i) sys.add_variable("v" + std::to_string(i));
        int m = rows(rng);
        for (int r = 0; r < m; ++r) {
            std::vector<std::pair<std::size_t, Rational>> terms;
            Rational lhs(0);
            for (int i = 0; i < n; ++i) {
                Rational c(coeff(rng));
                if (c.is_zero()) continue;
                terms.emplace_back(i, c);
                lhs += c * point[i];
            }
            bool strict = rel(rng) == 1;
            Rational slack(slackv(rng));
            if (strict) slack += Rational(1, 2);
            sys.add_constraint(std::move(terms), strict ? Rel::Less : Rel::LessEq, lhs + slack);
        }
        CHECK(check_witness(sys, point));
        auto result = solve(sys);
        REQUIRE(result.feasible);
        CHECK(check_witness(sys, result.assignment));
    }
}

TEST_CASE("random nonnegative combinations with negative sum are infeasible") {
    std::mt19937_64 rng(9012);
    std::uniform_int_distribution<std::int64_t> coeff(-3, 3);
    std::uniform_int_distribution<std::int64_t> mult(1, 3);
    std::uniform_int_distribution<int> nvars(1, 4), extra(0, 3);
    for (int round = 0; round < 1500; ++round) {
        const int n = nvars(rng);
        // rows r_1..r_{m-1} random; the last row is chosen so that the
        // positive combination of all rows has zero coefficients and a
        // negative constant: a Farkas certificate of infeasibility.
        const int m = 2 + extra(rng);
        std::vector<std::vector<Rational>> rowcoef(m, std::vector<Rational>(n, Rational(0)));
        std::vector<Rational> rowrhs(m, Rational(0));
        std::vector<Rational> lambda(m, Rational(0));
        for (int r = 0; r < m - 1; ++r) {
            for (int i = 0; i < n; ++i) rowcoef[r][i] = Rational(coeff(rng));
            rowrhs[r] = Rational(coeff(rng));
            lambda[r] = Rational(mult(rng));
        }
        lambda[m - 1] = Rational(mult(rng));
        Rational combo_rhs(0);
        for (int i = 0; i < n; ++i) {
            Rational acc(0);
            for (int r = 0; r < m - 1; ++r) acc += lambda[r] * rowcoef[r][i];
            rowcoef[m - 1][i] = -acc / lambda[m - 1];
        }
        for (int r = 0; r < m - 1; ++r) combo_rhs += lambda[r] * rowrhs[r];
        // choose the final rhs so the combined constant is -1
        rowrhs[m - 1] = (Rational(-1) - combo_rhs) / lambda[m - 1];

        // certificate check, independent of the solver
        for (int i = 0; i < n; ++i) {
            Rational acc(0);
            for (int r = 0; r < m; ++r) acc += lambda[r] * rowcoef[r][i];
            REQUIRE(acc.is_zero());
        }
        Rational total(0);
        for (int r = 0; r < m; ++r) total += lambda[r] * rowrhs[r];
        REQUIRE(total == Rational(-1));

        LinearSystem sys;
        for (int i = 0; i < n; ++i) sys.add_variable("v" + std::to_string(i));
        for (int r = 0; r < m; ++r) {
            std::vector<std::pair<std::size_t, Rational>> terms;
            for (int i = 0; i < n; ++i)
                if (!rowcoef[r][i].is_zero()) terms.emplace_back(i, rowcoef[r][i]);
            sys.add_constraint(std::move(terms), Rel::LessEq, rowrhs[r]);
        }
        CHECK_FALSE(solve(sys).feasible);
    }
}

TEST_CASE("determinism: identical systems give identical witnesses") {
    auto build = [] {
        LinearSystem sys;
        auto a = sys.add_variable("a");
        auto b = sys.add_variable("b");
        auto c = sys.add_variable("c");
        sys.add_lower_bound(a, Rational(1));
        sys.add_less(a, b);
        sys.add_less(b, c, Rel::LessEq);
        sys.add_upper_bound(c, Rational(10));
        return sys;
    };
    auto r1 = solve(build());
    auto r2 = solve(build());
    REQUIRE(r1.feasible);
    CHECK(r1.assignment == r2.assignment);
}

TEST_CASE("scaling all constants preserves feasibility") {
    std::mt19937_64 rng(3456);
    std::uniform_int_distribution<std::int64_t> coeff(-2, 2);
    std::uniform_int_distribution<std::int64_t> rhs(-6, 6);
    std::uniform_int_distribution<int> nvars(1, 3), rows(1, 5), rel(0, 1);
    const Rational factors[] = {Rational(2), Rational(1, 3), Rational(7, 2)};
    for (int round = 0; round < 600; ++round) {
        const int n = nvars(rng);
        const int m = rows(rng);
        std::vector<std::vector<std::pair<std::size_t, Rational>>> terms(m);
        std::vector<Rel> rels(m);
        std::vector<Rational> rhss(m);
        for (int r = 0; r < m; ++r) {
            for (int i = 0; i < n; ++i) {
                Rational c(coeff(rng));
                if (!c.is_zero()) terms[r].emplace_back(i, c);
            }
            rels[r] = rel(rng) ? Rel::Less : Rel::LessEq;
            rhss[r] = Rational(rhs(rng));
        }
        auto build = [&](const Rational& f) {
            LinearSystem sys;
            for (int i = 0; i < n; ++i) sys.add_variable("v" + std::to_string(i));
            for (int r = 0; r < m; ++r) sys.add_constraint(terms[r], rels[r], rhss[r] * f);
            return sys;
        };
        const bool base = solve(build(Rational(1))).feasible;
        for (const auto& f : factors) CHECK(solve(build(f)).feasible == base);
    }
}
