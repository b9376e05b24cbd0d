// Copyright (c) gozinta contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "gozinta/achieve.hpp"
#include "gozinta/constructions.hpp"

using namespace gozinta;

namespace {

PermSpec spec_of(std::size_t k, std::size_t dim, std::initializer_list<const char*> perms) {
    std::vector<Permutation> ps;
    for (const char* p : perms) ps.push_back(Permutation::parse(p));
    return PermSpec::make(k, dim, std::move(ps));
}

}  // namespace

TEST_CASE("case counts") {
    CHECK(case_count(spec_of(1, 2, {}), false) == 5);
    CHECK(case_count(spec_of(2, 3, {"21"}), false) == 29 * 29);
    CHECK(case_count(spec_of(4, 3, {"4321"}), false) == 707281);
    CHECK(case_count(spec_of(5, 2, {"54321"}), false) == 371293);
    // natural+reverse restriction: forced endpoints, two patterns for
    // middles, one rank choice per box
    CHECK(case_count(spec_of(4, 3, {"4321"}), true) == 5184);
    CHECK(case_count(spec_of(2, 3, {"21"}), true) == 36);
    CHECK_THROWS_WITH_AS((void)case_count(spec_of(4, 3, {"2413"}), true),
                         doctest::Contains("NormalizeUnsupported"), Error);
}

TEST_CASE("single-box enumeration in lexicographic order") {
    auto cases = enumerate_cases(spec_of(1, 2, {}), false);
    REQUIRE(cases.size() == 5);
    CHECK(cases[0].expand_side[0] == 1);
    CHECK_FALSE(cases[0].expanded[0][0]);
    CHECK(cases[1].expanded[0][0]);
    CHECK(cases[1].rank[0][0] == 1);
    CHECK(cases[2].rank[0][0] == 2);
    CHECK(cases[3].expand_side[0] == 2);
    CHECK_FALSE(cases[3].expanded[0][0]);
    CHECK(cases[4].expand_side[0] == 2);
    CHECK(cases[4].rank[0][0] == 2);
}

TEST_CASE("normalized enumeration forces endpoint patterns") {
    auto cases = enumerate_cases(spec_of(2, 3, {"21"}), true);
    CHECK(cases.size() == 36);
    for (const auto& c : cases) {
        CHECK_FALSE(c.expanded[0][0]);  // innermost of the natural order
        CHECK(c.expanded[0][1]);
        CHECK(c.expanded[1][0]);
        CHECK_FALSE(c.expanded[1][1]);
        CHECK(c.rank[0][1] >= c.expand_side[0]);
        CHECK(c.rank[1][0] >= c.expand_side[1]);
    }
}

TEST_CASE("case systems: closed identity pair is the sorted chain") {
    PermSpec spec = spec_of(2, 3, {"21"});
    auto cases = enumerate_cases(spec, false);
    // first case: everything closed, both arrangements; infeasible
    CHECK_FALSE(solve(case_to_system(cases[0], spec).sys).feasible);
}

TEST_CASE("witness values satisfy their own case system") {
    // the nested-triple configuration as a case of {identity, reverse}
    PermSpec spec = spec_of(3, 3, {"321"});
    CaseAssignment cas;
    cas.expand_side = {1, 1, 1};
    cas.expanded = {{false, true}, {false, false}, {true, false}};
    cas.rank = {{0, 3}, {0, 0}, {3, 0}};
    CaseSystem built = case_to_system(cas, spec);
    auto r = solve(built.sys);
    REQUIRE(r.feasible);
    CHECK(check_witness(built.sys, r.assignment));

    // substitute the worked triple: A=C=(6,8,10) expanding to 12, B=(7,9,11)
    std::vector<Rational> point(built.sys.variable_count(), Rational(0));
    auto set_box = [&](std::size_t b, std::initializer_list<std::int64_t> vals) {
        std::size_t i = 0;
        for (auto v : vals) point[built.x[b][i++]] = Rational(v);
    };
    set_box(0, {6, 8, 10});
    set_box(1, {7, 9, 11});
    set_box(2, {6, 8, 10});
    point[built.amount[0][1]] = Rational(12);
    point[built.amount[2][0]] = Rational(12);
    CHECK(check_witness(built.sys, point));
}

TEST_CASE("pruned search agrees with flat per-case solving") {
    auto cross_check = [](const PermSpec& spec, bool normalize) {
        std::vector<bool> verdicts;
        for (const auto& cas : enumerate_cases(spec, normalize))
            verdicts.push_back(solve(case_to_system(cas, spec).sys).feasible);
        CHECK(verdicts.size() == case_count(spec, normalize));
        SearchResult result = jointly_achievable(spec, normalize);
        std::size_t first = verdicts.size();
        for (std::size_t i = 0; i < verdicts.size(); ++i)
            if (verdicts[i]) {
                first = i;
                break;
            }
        if (first == verdicts.size()) {
            CHECK_FALSE(result.found);
            CHECK(result.cases_checked == verdicts.size());
        } else {
            REQUIRE(result.found);
            CHECK(result.case_index == first);
        }
    };
    cross_check(spec_of(2, 2, {"21"}), false);
    cross_check(spec_of(2, 3, {"21"}), false);
    cross_check(spec_of(2, 3, {"21"}), true);
    cross_check(spec_of(3, 2, {"321"}), true);
    cross_check(spec_of(1, 3, {}), false);
}

TEST_CASE("pair search finds a witness that survives bound restoration") {
    SearchResult r = achievable(spec_of(2, 3, {"21"}));
    REQUIRE(r.found);
    CHECK(verify_trick(r.witness).ok);
    TrickInstance bounded = restore_expansion_bound(r.witness);
    CHECK(bounded.enforce_bound);
    CHECK(verify_trick(bounded).ok);
    // deterministic: the same call returns the same witness
    SearchResult again = achievable(spec_of(2, 3, {"21"}));
    CHECK(again.case_index == r.case_index);
    CHECK(again.witness == r.witness);
}

TEST_CASE("the five-order triple set is jointly reachable") {
    SearchResult r = jointly_achievable(spec_of(3, 3, {"132", "231", "312", "321"}));
    REQUIRE(r.found);
    CHECK(r.witness.arrangements.size() == 5);
    CHECK(verify_trick(r.witness).ok);
    CHECK(verify_trick(restore_expansion_bound(r.witness)).ok);
}

TEST_CASE("impossibility sweep on a tiny space that has witnesses") {
    auto report = verify_impossibility(2, 2, {Permutation::parse("21")});
    CHECK(report.cases_total == 169);
    CHECK_FALSE(report.all_infeasible);
    CHECK(report.feasible_cases > 0);
}

TEST_CASE("impossibility sweep confirms a known-empty space quickly") {
    // three boxes, 2D, all six orders: provably impossible
    std::vector<Permutation> all;
    for (const auto& p : all_permutations(3)) all.push_back(p);
    auto report = verify_impossibility(3, 2, all, 2);
    CHECK(report.cases_total == 793 * 793 * 793ULL);
    CHECK(report.all_infeasible);
    CHECK(report.feasible_cases == 0);
}

TEST_CASE("relabeling the permutation set preserves the verdict") {
    // conjugating every permutation by a relabeling keeps joint
    // reachability intact
    auto conjugate = [](const Permutation& p, const Permutation& sigma) {
        std::vector<std::size_t> v(p.size());
        for (std::size_t i = 1; i <= p.size(); ++i)
            v[sigma.at(i) - 1] = sigma.at(p.at(i));
        return Permutation(v);
    };
    std::vector<Permutation> base{Permutation::parse("132"), Permutation::parse("321")};
    for (const auto& sigma : all_permutations(3)) {
        std::vector<Permutation> mapped;
        for (const auto& p : base) mapped.push_back(conjugate(p, sigma));
        SearchResult lhs = jointly_achievable(PermSpec::make(3, 3, base));
        SearchResult rhs = jointly_achievable(PermSpec::make(3, 3, mapped));
        CHECK(lhs.found == rhs.found);
    }
}

TEST_CASE("pattern reports") {
    CHECK(pattern_report(catalog().at("ex-6-8-10").instance)[0] == "CCE");
    CHECK(pattern_report(catalog().at("ex-2d-quad").instance) ==
          std::vector<std::string>{"CCEE", "CCEE"});

    TrickInstance solo;
    solo.boxes.push_back({"A", make_dims({3, 4, 5}), std::nullopt});
    Arrangement arr;
    arr.name = "solo";
    arr.order = {"A"};
    arr.presentation["A"] = Presentation::make_closed();
    solo.arrangements.push_back(arr);
    CHECK(pattern_report(solo) == std::vector<std::string>{"C"});

    TrickInstance broken = catalog().at("ex-6-8-10").instance;
    broken.arrangements[0].presentation["C"] = Presentation::make_closed();
    CHECK_THROWS_WITH_AS((void)pattern_report(broken), doctest::Contains("NotVerified"), Error);
}

TEST_CASE("a fixed triple cannot be stacked as BAC no matter the amounts") {
    // dims pinned to the five-order catalog set; every closed/expanded
    // pattern with every rank placement of the amounts is infeasible
    const std::vector<std::vector<std::int64_t>> dims{{10, 13, 16}, {11, 14, 17}, {9, 12, 15}};
    const std::size_t order[] = {1, 0, 2};  // B inside A inside C
    for (std::size_t mask = 0; mask < 8; ++mask) {
        std::vector<std::vector<std::size_t>> rank_options(3);
        for (std::size_t b = 0; b < 3; ++b) {
            if (mask & (1u << b)) rank_options[b] = {1, 2, 3};  // expanded, side 1
            else rank_options[b] = {0};                         // closed
        }
        for (std::size_t r0 : rank_options[0])
            for (std::size_t r1 : rank_options[1])
                for (std::size_t r2 : rank_options[2]) {
                    const std::size_t ranks[] = {r0, r1, r2};
                    LinearSystem sys;
                    std::vector<std::size_t> evar(3, 0);
                    for (std::size_t b = 0; b < 3; ++b)
                        if (ranks[b] != 0) {
                            evar[b] = sys.add_variable("e" + std::to_string(b));
                            sys.add_lower_bound(evar[b], Rational(dims[b][0]), Rel::Less);
                            if (ranks[b] < 3)
                                sys.add_upper_bound(evar[b], Rational(dims[b][ranks[b]]));
                            if (ranks[b] > 1)
                                sys.add_lower_bound(evar[b], Rational(dims[b][ranks[b] - 1]));
                        }
                    // presented component i of box b (constant or variable)
                    auto component = [&](std::size_t b, std::size_t i) {
                        std::pair<bool, Rational> out{false, Rational(0)};
                        if (ranks[b] == 0) {
                            out.second = Rational(dims[b][i - 1]);
                            return out;
                        }
                        if (i == ranks[b]) {
                            out.first = true;
                            return out;
                        }
                        out.second = i < ranks[b] ? Rational(dims[b][i]) : Rational(dims[b][i - 1]);
                        return out;
                    };
                    bool impossible_row = false;
                    for (std::size_t pos = 0; pos + 1 < 3 && !impossible_row; ++pos) {
                        const std::size_t inner = order[pos], outer = order[pos + 1];
                        for (std::size_t i = 1; i <= 3; ++i) {
                            auto ci = component(inner, i);
                            auto co = component(outer, i);
                            std::vector<std::pair<std::size_t, Rational>> terms;
                            Rational rhs(0);
                            if (ci.first) terms.emplace_back(evar[inner], Rational(1));
                            else rhs -= ci.second;
                            if (co.first) terms.emplace_back(evar[outer], Rational(-1));
                            else rhs += co.second;
                            if (terms.empty()) {
                                if (!(Rational(0) < rhs)) impossible_row = true;
                            } else {
                                sys.add_constraint(std::move(terms), Rel::Less, rhs);
                            }
                        }
                    }
                    if (!impossible_row) CHECK_FALSE(solve(sys).feasible);
                }
    }
}
