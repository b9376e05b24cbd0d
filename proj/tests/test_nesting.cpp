// Copyright (c) gozinta contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "gozinta/constructions.hpp"
#include "gozinta/nesting.hpp"

using namespace gozinta;

namespace {

Arrangement arr_of(const TrickInstance& w, const std::string& name) {
    for (const auto& a : w.arrangements)
        if (a.name == name) return a;
    REQUIRE(false);
    return {};
}

}  // namespace

TEST_CASE("verify_arrangement accepts a nested triple") {
    const TrickInstance& w = catalog().at("ex-6-8-10").instance;
    auto report = verify_arrangement(w.boxes, arr_of(w, "ABC"), true);
    CHECK(report.ok);
    CHECK(report.violations.empty());
}

TEST_CASE("single box is vacuously ok") {
    std::vector<BoxDesign> boxes{{"A", make_dims({6, 8, 10}), 1}};
    Arrangement arr;
    arr.name = "solo";
    arr.order = {"A"};
    arr.presentation["A"] = Presentation::expanded(Scalar(12));
    CHECK(verify_arrangement(boxes, arr, true).ok);
}

TEST_CASE("equal closed boxes violate every coordinate") {
    std::vector<BoxDesign> boxes{{"A", make_dims({6, 8, 10}), 1},
                                 {"B", make_dims({6, 8, 10}), 1}};
    Arrangement arr;
    arr.name = "stack";
    arr.order = {"A", "B"};
    arr.presentation["A"] = Presentation::make_closed();
    arr.presentation["B"] = Presentation::make_closed();
    auto report = verify_arrangement(boxes, arr, true);
    CHECK_FALSE(report.ok);
    CHECK(report.violations.size() == 3);
    for (const auto& v : report.violations) {
        CHECK(v.inner == "A");
        CHECK(v.outer == "B");
    }
}

TEST_CASE("reversing a strictly nested closed chain always fails") {
    std::vector<BoxDesign> boxes{{"A", make_dims({3, 4, 5}), std::nullopt},
                                 {"B", make_dims({4, 5, 6}), std::nullopt},
                                 {"C", make_dims({5, 6, 7}), std::nullopt}};
    Arrangement fwd, rev;
    fwd.name = "fwd";
    fwd.order = {"A", "B", "C"};
    rev.name = "rev";
    rev.order = {"C", "B", "A"};
    for (const auto& b : boxes) {
        fwd.presentation[b.label] = Presentation::make_closed();
        rev.presentation[b.label] = Presentation::make_closed();
    }
    CHECK(verify_arrangement(boxes, fwd, true).ok);
    auto r = verify_arrangement(boxes, rev, true);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.violations.empty());
}

TEST_CASE("presentation problems are reported, not thrown") {
    std::vector<BoxDesign> boxes{{"A", make_dims({3, 4, 5}), std::nullopt}};
    Arrangement arr;
    arr.name = "bad";
    arr.order = {"A"};
    arr.presentation["A"] = Presentation::expanded(Scalar(6));  // no expand side
    auto report = verify_arrangement(boxes, arr, true);
    CHECK_FALSE(report.ok);
    REQUIRE(report.presentation_errors.size() == 1);
    CHECK(report.presentation_errors[0].label == "A");

    // bound violation reported only when enforcement is on
    std::vector<BoxDesign> boxes2{{"A", make_dims({3, 4, 5}), 1}};
    Arrangement arr2;
    arr2.name = "big";
    arr2.order = {"A"};
    arr2.presentation["A"] = Presentation::expanded(Scalar(7));
    CHECK_FALSE(verify_arrangement(boxes2, arr2, true).ok);
    CHECK(verify_arrangement(boxes2, arr2, false).ok);
}

TEST_CASE("verify_trick aggregates across arrangements") {
    const TrickInstance& w = catalog().at("ex-butBAC").instance;
    CHECK(verify_trick(w).ok);

    TrickInstance broken = w;
    broken.arrangements[2].presentation["A"] = Presentation::make_closed();
    auto report = verify_trick(broken);
    CHECK_FALSE(report.ok);
    for (const auto& v : report.violations) CHECK(v.arrangement_index == 2);
}

TEST_CASE("diagram rendering matches the stack convention") {
    const TrickInstance& pair = catalog().at("ex-3-4-5").instance;
    CHECK(render_diagram(pair.boxes, arr_of(pair, "reverse")) ==
          "A: 4 × 5 × 6(3)\nB: 3 × 4 × 5\n");

    std::vector<BoxDesign> solo{{"A", make_dims({6, 8, 10}), std::nullopt}};
    Arrangement arr;
    arr.name = "solo";
    arr.order = {"A"};
    arr.presentation["A"] = Presentation::make_closed();
    CHECK(render_diagram(solo, arr) == "A: 6 × 8 × 10\n");

    const TrickInstance& quad = catalog().at("ex-2d-quad").instance;
    auto lines = render_diagram(quad.boxes, arr_of(quad, "reverse"));
    CHECK(lines.substr(0, lines.find('\n')) == "A: 14 × 16(8)");
}

TEST_CASE("fractional sides render as p/q") {
    TrickInstance w = gen_triple(3);
    auto text = render_diagram(w.boxes, w.arrangements[0]);
    CHECK(text == "C: 4 × 5 × 6(3)\nB: 7/2 × 9/2 × 11/2\nA: 3 × 4 × 5\n");
}

TEST_CASE("mutual fit with and without the bound") {
    CHECK(pair_mutually_fits(make_dims({3, 4, 5}), make_dims({3, 4, 5}), true));
    CHECK_FALSE(pair_mutually_fits(make_dims({1, 2, 3}), make_dims({5, 6, 7}), false));
    CHECK(pair_mutually_fits(make_dims({5, 7, 11}), make_dims({6, 8, 10}), true));
    // the bound forces the wide box to expand its largest side; still fits
    CHECK(pair_mutually_fits(make_dims({5, 7, 999}), make_dims({6, 8, 500}), true));
    // without the bound the smallest-side reduction covers the same pair
    CHECK(pair_mutually_fits(make_dims({5, 7, 999}), make_dims({6, 8, 500}), false));
    CHECK_THROWS_WITH_AS(
        (void)pair_mutually_fits(make_dims({1, 2}), make_dims({1, 2, 3}), false),
        doctest::Contains("DimensionMismatch"), Error);
}

TEST_CASE("pair classification on the worked pairs") {
    auto type = [](std::initializer_list<std::int64_t> a, std::initializer_list<std::int64_t> b) {
        return classify_pair(make_dims(a), make_dims(b)).type_id;
    };
    CHECK(type({6, 8, 10}, {7, 9, 11}) == 1);
    CHECK(type({6, 9, 10}, {7, 8, 11}) == 3);
    CHECK(type({5, 7, 999}, {6, 8, 500}) == 2);
    CHECK(type({5, 11, 13}, {7, 10, 12}) == 4);
    CHECK(type({3, 4, 5}, {3, 4, 5}) == 1);
    CHECK(type({4, 6, 6}, {5, 5, 7}) == 3);
}

TEST_CASE("classification swaps roles when needed") {
    auto swapped = classify_pair(make_dims({7, 9, 11}), make_dims({6, 8, 10}));
    CHECK(swapped.type_id == 1);
    CHECK(swapped.swapped);
    auto in_order = classify_pair(make_dims({6, 8, 10}), make_dims({7, 9, 11}));
    CHECK_FALSE(in_order.swapped);
    CHECK(in_order.chain_string() == "a1 < b1 < a2 < b2 < a3 < b3");
    auto equal = classify_pair(make_dims({3, 4, 5}), make_dims({3, 4, 5}));
    CHECK(equal.chain_string() == "a1 = b1 < a2 = b2 < a3 = b3");
}

TEST_CASE("classification rejects non-nestable pairs") {
    CHECK_THROWS_WITH_AS((void)classify_pair(make_dims({1, 2, 3}), make_dims({5, 6, 7})),
                         doctest::Contains("NotMutuallyNestable"), Error);
    CHECK_THROWS_WITH_AS((void)classify_pair(make_dims({1, 2}), make_dims({1, 2})),
                         doctest::Contains("DimensionMismatch"), Error);
}
