// Copyright (c) gozinta contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gozinta/core.hpp"
#include "gozinta/errors.hpp"
#include "gozinta/nesting.hpp"
#include "gozinta/rational.hpp"

namespace gozinta {

namespace detail {

inline void require_verified(const TrickInstance& w, const char* op) {
    TrickInstance relaxed = w;
    relaxed.enforce_bound = false;
    VerifyReport r = verify_trick(relaxed);
    if (!r.ok)
        throw Error(Errc::UnverifiedInput,
                    std::string(op) + " needs a verified input:\n" + r.summary());
}

inline std::vector<Scalar> all_values(const TrickInstance& w) {
    std::vector<Scalar> vals;
    for (const auto& b : w.boxes)
        for (const auto& s : b.dims.sides()) vals.push_back(s);
    for (const auto& arr : w.arrangements)
        for (const auto& [label, p] : arr.presentation)
            if (!p.closed()) vals.push_back(*p.amount);
    return vals;
}

inline std::string fresh_label(std::size_t index) {
    if (index < 26) return std::string(1, static_cast<char>('A' + index));
    return "B" + std::to_string(index + 1);
}

}  // namespace detail

/// Stacks one whole verified set inside another: the second set's sides
/// are shifted above everything in the first set, orders concatenate
/// arrangement-by-arrangement. With inputs realizing p1 and p2, the
/// output realizes p1 followed by p2 raised past p1's elements.
inline TrickInstance boost_concat(const TrickInstance& w1, const TrickInstance& w2) {
    if (w1.boxes.empty() || w2.boxes.empty())
        throw Error(Errc::UnverifiedInput, "concatenation needs non-empty inputs");
    const std::size_t dim = w1.boxes[0].dims.size();
    for (const auto& b : w2.boxes)
        if (b.dims.size() != dim)
            throw Error(Errc::DimensionMismatch, "inputs have different dimensions");
    detail::require_verified(w1, "boost_concat");
    detail::require_verified(w2, "boost_concat");
    if (w1.arrangements.size() != w2.arrangements.size())
        throw Error(Errc::ArrangementMismatch,
                    "inputs must have the same number of arrangements");

    Scalar max1(0);
    for (const auto& v : detail::all_values(w1))
        if (v > max1) max1 = v;
    const Scalar shift = Rational(max1.ceil(), BigInt(1)) + Scalar(1);

    TrickInstance out;
    out.enforce_bound = false;
    std::map<std::string, std::string> relabel1, relabel2;
    for (std::size_t i = 0; i < w1.boxes.size(); ++i) {
        BoxDesign b = w1.boxes[i];
        relabel1[b.label] = detail::fresh_label(i);
        b.label = relabel1[b.label];
        out.boxes.push_back(std::move(b));
    }
    for (std::size_t i = 0; i < w2.boxes.size(); ++i) {
        BoxDesign b = w2.boxes[i];
        relabel2[b.label] = detail::fresh_label(w1.boxes.size() + i);
        b.label = relabel2[b.label];
        std::vector<Scalar> sides;
        for (const auto& s : b.dims.sides()) sides.push_back(s + shift);
        b.dims = make_dims(std::move(sides));
        out.boxes.push_back(std::move(b));
    }
    for (std::size_t a = 0; a < w1.arrangements.size(); ++a) {
        const Arrangement& a1 = w1.arrangements[a];
        const Arrangement& a2 = w2.arrangements[a];
        Arrangement merged;
        merged.name = a1.name + "+" + a2.name;
        for (const auto& label : a1.order) {
            merged.order.push_back(relabel1.at(label));
            merged.presentation[relabel1.at(label)] = a1.presentation_of(label);
        }
        for (const auto& label : a2.order) {
            merged.order.push_back(relabel2.at(label));
            Presentation p = a2.presentation_of(label);
            if (!p.closed()) p = Presentation::expanded(*p.amount + shift);
            merged.presentation[relabel2.at(label)] = p;
        }
        out.arrangements.push_back(std::move(merged));
    }
    VerifyReport check = verify_trick(out);
    if (!check.ok)
        throw Error(Errc::NotVerified, "concatenated instance failed verification:\n" +
                                           check.summary());
    return out;
}

/// Adds a slightly inflated copy of box number x (1-based position in
/// the natural order) immediately outside it in every arrangement. The
/// inflation is half the smallest nonzero difference between any two
/// values in the instance, so every strict inequality survives.
inline TrickInstance boost_duplicate(const TrickInstance& w, std::size_t x) {
    detail::require_verified(w, "boost_duplicate");
    if (x < 1 || x > w.boxes.size())
        throw Error(Errc::ElementAbsent,
                    "no box at natural position " + std::to_string(x));

    std::vector<Scalar> vals = detail::all_values(w);
    std::optional<Scalar> d;
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = i + 1; j < vals.size(); ++j) {
            Scalar diff = vals[i] < vals[j] ? vals[j] - vals[i] : vals[i] - vals[j];
            if (!diff.is_zero() && (!d || diff < *d)) d = diff;
        }
    const Scalar eps = d ? *d / Scalar(2) : Scalar(1);

    const BoxDesign& original = w.boxes[x - 1];
    BoxDesign copy = original;
    {
        std::vector<Scalar> sides;
        for (const auto& s : original.dims.sides()) sides.push_back(s + eps);
        copy.dims = make_dims(std::move(sides));
    }

    TrickInstance out;
    out.enforce_bound = false;
    std::map<std::string, std::string> relabel;
    std::string copy_label;
    for (std::size_t i = 0; i < w.boxes.size(); ++i) {
        BoxDesign b = w.boxes[i];
        relabel[b.label] = detail::fresh_label(i < x ? i : i + 1);
        b.label = relabel[b.label];
        out.boxes.push_back(std::move(b));
        if (i + 1 == x) {
            copy_label = detail::fresh_label(x);
            copy.label = copy_label;
            out.boxes.push_back(copy);
        }
    }
    const std::string& anchor = w.boxes[x - 1].label;
    for (const auto& arr : w.arrangements) {
        Arrangement merged;
        merged.name = arr.name;
        for (const auto& label : arr.order) {
            merged.order.push_back(relabel.at(label));
            merged.presentation[relabel.at(label)] = arr.presentation_of(label);
            if (label == anchor) {
                merged.order.push_back(copy_label);
                Presentation p = arr.presentation_of(label);
                if (!p.closed()) p = Presentation::expanded(*p.amount + eps);
                merged.presentation[copy_label] = p;
            }
        }
        out.arrangements.push_back(std::move(merged));
    }
    VerifyReport check = verify_trick(out);
    if (!check.ok)
        throw Error(Errc::NotVerified,
                    "duplicated instance failed verification:\n" + check.summary());
    return out;
}

/// Relabels the boxes so the second arrangement becomes the natural
/// order; the old natural order then reads as the inverse permutation.
inline TrickInstance boost_inverse(const TrickInstance& w) {
    detail::require_verified(w, "boost_inverse");
    if (w.arrangements.size() != 2)
        throw Error(Errc::ArrangementMismatch,
                    "inversion expects exactly two arrangements");
    std::vector<std::string> natural;
    for (const auto& b : w.boxes) natural.push_back(b.label);
    std::size_t nat_idx = 2;
    for (std::size_t i = 0; i < 2; ++i)
        if (w.arrangements[i].order == natural) {
            nat_idx = i;
            break;
        }
    if (nat_idx == 2)
        throw Error(Errc::ArrangementMismatch,
                    "one arrangement must be the natural order");
    const Arrangement& nat = w.arrangements[nat_idx];
    const Arrangement& other = w.arrangements[1 - nat_idx];

    std::map<std::string, std::string> relabel;
    TrickInstance out;
    out.enforce_bound = w.enforce_bound;
    for (std::size_t i = 0; i < other.order.size(); ++i) {
        BoxDesign b = w.box(other.order[i]);
        relabel[b.label] = detail::fresh_label(i);
        b.label = relabel[b.label];
        out.boxes.push_back(std::move(b));
    }
    Arrangement new_nat;
    new_nat.name = "natural";
    for (const auto& label : other.order) {
        new_nat.order.push_back(relabel.at(label));
        new_nat.presentation[relabel.at(label)] = other.presentation_of(label);
    }
    Arrangement new_inv;
    new_inv.name = "inverse";
    for (const auto& label : nat.order) {
        new_inv.order.push_back(relabel.at(label));
        new_inv.presentation[relabel.at(label)] = nat.presentation_of(label);
    }
    out.arrangements.push_back(std::move(new_nat));
    out.arrangements.push_back(std::move(new_inv));
    VerifyReport check = verify_trick(out);
    if (!check.ok)
        throw Error(Errc::NotVerified,
                    "relabeled instance failed verification:\n" + check.summary());
    return out;
}

/// Drops the largest closed side of every box. A box that expanded its
/// largest side becomes closed in that arrangement; any other expansion
/// keeps its amount (the dropped value is the old largest closed side).
/// The result must re-verify; a failure is reported, never patched.
inline TrickInstance reduce_dimension(const TrickInstance& w) {
    if (w.boxes.empty() || w.boxes[0].dims.size() < 3)
        throw Error(Errc::DimensionTooSmall, "reduction needs dimension 3 or higher");
    detail::require_verified(w, "reduce_dimension");

    const std::size_t n = w.boxes[0].dims.size();
    TrickInstance out;
    out.enforce_bound = false;
    for (const auto& b : w.boxes) {
        BoxDesign nb = b;
        std::vector<Scalar> sides(b.dims.sides().begin(), b.dims.sides().end() - 1);
        nb.dims = make_dims(std::move(sides));
        if (nb.expand_side && *nb.expand_side == n) nb.expand_side.reset();
        out.boxes.push_back(std::move(nb));
    }
    for (const auto& arr : w.arrangements) {
        Arrangement na;
        na.name = arr.name;
        na.order = arr.order;
        for (const auto& label : arr.order) {
            const Presentation& p = arr.presentation_of(label);
            const BoxDesign& b = w.box(label);
            if (p.closed() || (b.expand_side && *b.expand_side == n))
                na.presentation[label] = Presentation::make_closed();
            else
                na.presentation[label] = p;
        }
        out.arrangements.push_back(std::move(na));
    }
    VerifyReport check = verify_trick(out);
    if (!check.ok)
        throw Error(Errc::ReductionMismatch,
                    "reduced instance does not verify:\n" + check.summary());
    return out;
}

namespace detail {

inline TrickInstance transform_values(const TrickInstance& w,
                                      const std::function<Scalar(const Scalar&)>& f) {
    TrickInstance out = w;
    for (auto& b : out.boxes) {
        std::vector<Scalar> sides;
        for (const auto& s : b.dims.sides()) sides.push_back(f(s));
        b.dims = make_dims(std::move(sides));
    }
    for (auto& arr : out.arrangements)
        for (auto& [label, p] : arr.presentation)
            if (!p.closed()) p = Presentation::expanded(f(*p.amount));
    return out;
}

}  // namespace detail

/// Multiplies every side and amount by c > 0.
inline TrickInstance scale(const TrickInstance& w, const Scalar& c) {
    if (!(c > Scalar(0)))
        throw Error(Errc::NonPositiveConstant, "scale factor must be positive");
    return detail::transform_values(w, [&](const Scalar& v) { return v * c; });
}

/// Adds c > 0 to every side and amount.
inline TrickInstance shift(const TrickInstance& w, const Scalar& c) {
    if (!(c > Scalar(0)))
        throw Error(Errc::NonPositiveConstant, "shift constant must be positive");
    return detail::transform_values(w, [&](const Scalar& v) { return v + c; });
}

/// Shifts a bound-free witness far enough that every expansion amount
/// lands within twice its side, then turns bound enforcement on.
inline TrickInstance restore_expansion_bound(const TrickInstance& w) {
    detail::require_verified(w, "restore_expansion_bound");
    Scalar max_val(0);
    for (const auto& v : detail::all_values(w))
        if (v > max_val) max_val = v;
    TrickInstance out = shift(w, max_val + Scalar(1));
    out.enforce_bound = true;
    VerifyReport check = verify_trick(out);
    if (!check.ok)
        throw Error(Errc::NotVerified,
                    "bound restoration failed verification:\n" + check.summary());
    return out;
}

/// Replaces one closed side whose value sits alone in a gap between the
/// other values of the instance. The computed gap endpoints are the
/// midpoints toward the nearest distinct values (half the side itself
/// when nothing lies below, twice it when nothing lies above); both
/// endpoints are themselves legal replacements. The move preserves
/// every order relation but can shrink a side below half its expansion
/// amount, so the result carries bound enforcement switched off; run
/// restore_expansion_bound to get a physical set back.
inline TrickInstance replace_gap_side(const TrickInstance& w, const std::string& label,
                                      std::size_t side_index, const Scalar& new_value) {
    const BoxDesign& box = w.box(label);
    if (side_index < 1 || side_index > box.dims.size())
        throw Error(Errc::ParseError, "side index out of range");
    const Scalar s = box.dims[side_index];

    std::vector<Scalar> others;
    for (const auto& b : w.boxes)
        for (std::size_t i = 1; i <= b.dims.size(); ++i)
            if (!(b.label == label && i == side_index)) others.push_back(b.dims[i]);
    for (const auto& arr : w.arrangements)
        for (const auto& [l, p] : arr.presentation)
            if (!p.closed()) others.push_back(*p.amount);

    std::optional<Scalar> lo, hi;
    for (const auto& v : others) {
        if (v == s)
            throw Error(Errc::NoIsolationGap,
                        "another side equals " + s.to_string() + "; no gap");
        if (v < s && (!lo || v > *lo)) lo = v;
        if (v > s && (!hi || v < *hi)) hi = v;
    }
    const Scalar x = lo ? (*lo + s) / Scalar(2) : s / Scalar(2);
    const Scalar y = hi ? (s + *hi) / Scalar(2) : Scalar(2) * s;
    if (new_value < x || new_value > y)
        throw Error(Errc::ValueOutsideGap, "replacement " + new_value.to_string() +
                                               " is outside [" + x.to_string() + ", " +
                                               y.to_string() + "]");

    TrickInstance out = w;
    out.enforce_bound = false;
    for (auto& b : out.boxes) {
        if (b.label != label) continue;
        std::vector<Scalar> sides = b.dims.sides();
        sides[side_index - 1] = new_value;
        b.dims = make_dims(std::move(sides));
    }
    VerifyReport check = verify_trick(out);
    if (!check.ok)
        throw Error(Errc::NotVerified,
                    "replacement broke verification:\n" + check.summary());
    return out;
}

/// Rewrites a two-arrangement instance so that every box's smaller
/// presented side-set acts as its closed form: the box is closed in the
/// arrangement where it shows that set and expands the one differing
/// side in the other. A box presenting the same set in both stays
/// closed in both. Geometry is unchanged; only the closed/expanded
/// bookkeeping moves. Output leaves the expansion bound unenforced.
inline TrickInstance observation_form(const TrickInstance& w) {
    if (w.arrangements.size() != 2)
        throw Error(Errc::ArrangementMismatch,
                    "the closed-once rewrite expects exactly two arrangements");
    detail::require_verified(w, "observation_form");
    TrickInstance out;
    out.enforce_bound = false;
    for (const auto& arr : w.arrangements) {
        Arrangement na;
        na.name = arr.name;
        na.order = arr.order;
        out.arrangements.push_back(std::move(na));
    }
    for (const auto& box : w.boxes) {
        Dims shown[2];
        for (std::size_t a = 0; a < 2; ++a)
            shown[a] = presented_dims(box, w.arrangements[a].presentation_of(box.label), false);
        auto volume = [](const Dims& d) {
            Scalar v(1);
            for (const auto& s : d.sides()) v *= s;
            return v;
        };
        BoxDesign nb;
        nb.label = box.label;
        if (shown[0] == shown[1]) {
            nb.dims = shown[0];
            nb.expand_side = std::nullopt;
            out.boxes.push_back(nb);
            for (std::size_t a = 0; a < 2; ++a)
                out.arrangements[a].presentation[box.label] = Presentation::make_closed();
            continue;
        }
        const std::size_t closed_in = volume(shown[0]) < volume(shown[1]) ? 0 : 1;
        const Dims& small = shown[closed_in];
        const Dims& large = shown[1 - closed_in];
        // the sets differ by one replaced element: small has one value
        // large lacks (the side) and large one that small lacks (the
        // amount)
        std::map<Scalar, int> delta;
        for (const auto& s : small.sides()) ++delta[s];
        for (const auto& s : large.sides()) --delta[s];
        std::optional<std::size_t> expand_index;
        Scalar amount(0);
        for (const auto& [value, count] : delta) {
            if (count > 0)
                for (std::size_t i = 1; i <= small.size(); ++i)
                    if (small[i] == value && !expand_index) expand_index = i;
            if (count < 0) amount = value;
        }
        if (!expand_index)
            throw Error(Errc::ReductionMismatch,
                        "presented sets differ by more than one replacement");
        nb.dims = small;
        nb.expand_side = expand_index;
        out.boxes.push_back(nb);
        out.arrangements[closed_in].presentation[box.label] = Presentation::make_closed();
        out.arrangements[1 - closed_in].presentation[box.label] =
            Presentation::expanded(amount);
    }
    VerifyReport check = verify_trick(out);
    if (!check.ok)
        throw Error(Errc::NotVerified,
                    "closed-once rewrite failed verification:\n" + check.summary());
    return out;
}

/// Three boxes in the given dimension: inner and outer share integer
/// sides n..2n-1 and expand the smallest side to exactly 2n; the middle
/// box takes the half-integer values between them and never expands.
inline TrickInstance gen_triple(std::size_t n) {
    if (n < 2) throw Error(Errc::DimensionTooSmall, "dimension must be at least 2");
    std::vector<Scalar> integer_sides, half_sides;
    for (std::size_t i = 0; i < n; ++i) {
        integer_sides.push_back(Scalar(static_cast<std::int64_t>(n + i)));
        half_sides.push_back(Scalar(static_cast<std::int64_t>(2 * (n + i) + 1), 2));
    }
    TrickInstance out;
    out.enforce_bound = true;
    out.boxes.push_back({"A", make_dims(std::vector<Scalar>(integer_sides)), 1});
    out.boxes.push_back({"B", make_dims(std::vector<Scalar>(half_sides)), std::nullopt});
    out.boxes.push_back({"C", make_dims(std::vector<Scalar>(integer_sides)), 1});
    const Scalar top(static_cast<std::int64_t>(2 * n));

    Arrangement natural;
    natural.name = "natural";
    natural.order = {"A", "B", "C"};
    natural.presentation["A"] = Presentation::make_closed();
    natural.presentation["B"] = Presentation::make_closed();
    natural.presentation["C"] = Presentation::expanded(top);
    Arrangement reverse;
    reverse.name = "reverse";
    reverse.order = {"C", "B", "A"};
    reverse.presentation["C"] = Presentation::make_closed();
    reverse.presentation["B"] = Presentation::make_closed();
    reverse.presentation["A"] = Presentation::expanded(top);
    out.arrangements.push_back(std::move(natural));
    out.arrangements.push_back(std::move(reverse));

    VerifyReport check = verify_trick(out);
    if (!check.ok)
        throw Error(Errc::NotVerified,
                    "generated triple failed verification:\n" + check.summary());
    return out;
}

/// A catalog entry: the instance plus a one-line description of the
/// configuration.
struct CatalogEntry {
    TrickInstance instance;
    std::string note;
};

namespace detail {

inline BoxDesign cat_box(const char* label, std::vector<std::int64_t> sides,
                         std::optional<std::size_t> expand) {
    std::vector<Scalar> s;
    for (auto v : sides) s.emplace_back(v);
    return BoxDesign{label, make_dims(std::move(s)), expand};
}

// order given as a string of single-letter labels, innermost first;
// amounts listed in the same order, 0 meaning closed
inline Arrangement cat_arr(const std::string& name, const std::string& order,
                           std::vector<std::int64_t> amounts) {
    Arrangement arr;
    arr.name = name;
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::string label(1, order[i]);
        arr.order.push_back(label);
        arr.presentation[label] = amounts[i] == 0
                                      ? Presentation::make_closed()
                                      : Presentation::expanded(Scalar(amounts[i]));
    }
    return arr;
}

}  // namespace detail

/// Every worked configuration shipped with the library, keyed by name.
/// All entries verify with the expansion bound enforced.
inline const std::map<std::string, CatalogEntry>& catalog() {
    static const std::map<std::string, CatalogEntry> entries = [] {
        using detail::cat_arr;
        using detail::cat_box;
        std::map<std::string, CatalogEntry> cat;

        cat["ex-3-4-5"] = {
            {{cat_box("A", {3, 4, 5}, 1), cat_box("B", {3, 4, 5}, 1)},
             {cat_arr("natural", "AB", {0, 6}), cat_arr("reverse", "BA", {0, 6})},
             true},
            "two equal boxes, each expanding its smallest side over the other"};

        cat["ex-6-8-10"] = {
            {{cat_box("A", {6, 8, 10}, 1), cat_box("B", {7, 9, 11}, 1),
              cat_box("C", {6, 8, 10}, 1)},
             {cat_arr("ABC", "ABC", {0, 0, 12}), cat_arr("ACB", "ACB", {0, 12, 14}),
              cat_arr("CAB", "CAB", {0, 12, 14}), cat_arr("CBA", "CBA", {0, 0, 12})},
             true},
            "triple with equal inner and outer boxes; four orders work"};

        cat["ex-6-9-10"] = {
            {{cat_box("A", {6, 9, 10}, 1), cat_box("B", {7, 8, 11}, 1)},
             {cat_arr("natural", "AB", {0, 12}), cat_arr("reverse", "BA", {0, 12})},
             true},
            "a pair where the outer box may expand a non-smallest side"};

        cat["ex-5-7-999"] = {
            {{cat_box("A", {5, 7, 999}, 1), cat_box("B", {6, 8, 500}, 3)},
             {cat_arr("natural", "AB", {0, 1000}), cat_arr("reverse", "BA", {0, 9})},
             true},
            "the second box must expand its largest side"};

        cat["ex-5-7-11"] = {
            {{cat_box("A", {5, 7, 11}, 1), cat_box("B", {6, 8, 10}, 1)},
             {cat_arr("natural", "AB", {0, 12}), cat_arr("reverse", "BA", {0, 9})},
             true},
            "an expanded side that does not become the largest"};

        cat["ex-5-11-13"] = {
            {{cat_box("A", {5, 11, 13}, 1), cat_box("B", {7, 10, 12}, 1)},
             {cat_arr("natural", "AB", {0, 14}), cat_arr("reverse", "BA", {0, 8})},
             true},
            "the smallest side expands yet stays the smallest"};

        cat["ex-2d-quad"] = {
            {{cat_box("A", {8, 14}, 1), cat_box("B", {9, 15}, 1), cat_box("C", {11, 13}, 2),
              cat_box("D", {10, 12}, 1)},
             {cat_arr("natural", "ABCD", {0, 0, 16, 20}),
              cat_arr("reverse", "DCBA", {0, 0, 12, 16})},
             true},
            "four rectangles in both the natural and the reverse order"};

        cat["ex-2d-quad-ad"] = {
            {{cat_box("A", {9, 13}, 1), cat_box("B", {11, 14}, 2), cat_box("C", {10, 15}, 1),
              cat_box("D", {9, 13}, 1)},
             {cat_arr("natural", "ABCD", {0, 0, 12, 16}),
              cat_arr("reverse", "DCBA", {0, 0, 16, 17})},
             true},
            "four rectangles with equal innermost and outermost"};

        cat["ex-2413"] = {
            {{cat_box("A", {12, 16, 20}, 1), cat_box("B", {13, 17, 21}, std::nullopt),
              cat_box("C", {14, 18, 22}, 1), cat_box("D", {15, 19, 23}, std::nullopt)},
             {cat_arr("natural", "ABCD", {0, 0, 0, 0}),
              cat_arr("2413", "BDAC", {0, 0, 24, 25})},
             true},
            "four boxes reordered to 2413"};

        cat["ex-2431"] = {
            {{cat_box("A", {12, 16, 20}, 1), cat_box("B", {13, 17, 21}, std::nullopt),
              cat_box("C", {15, 19, 23}, std::nullopt), cat_box("D", {14, 18, 22}, 1)},
             {cat_arr("natural", "ABCD", {0, 0, 0, 24}),
              cat_arr("2431", "BDCA", {0, 0, 0, 24})},
             true},
            "four boxes reordered to 2431"};

        cat["ex-3241"] = {
            {{cat_box("A", {10, 13, 16}, 1), cat_box("B", {11, 14, 17}, std::nullopt),
              cat_box("C", {10, 13, 16}, 1), cat_box("D", {12, 15, 18}, 1)},
             {cat_arr("natural", "ABCD", {0, 0, 18, 19}),
              cat_arr("3241", "CBDA", {0, 0, 0, 19})},
             true},
            "four boxes reordered to 3241; first and third are equal"};

        cat["ex-butBAC"] = {
            {{cat_box("A", {10, 13, 16}, 1), cat_box("B", {11, 14, 17}, 1),
              cat_box("C", {9, 12, 15}, 1)},
             {cat_arr("ABC", "ABC", {0, 0, 18}), cat_arr("ACB", "ACB", {0, 17, 18}),
              cat_arr("BCA", "BCA", {0, 18, 19}), cat_arr("CAB", "CAB", {0, 0, 0}),
              cat_arr("CBA", "CBA", {0, 0, 18})},
             true},
            "three boxes realizing every order except BAC"};

        cat["ex-butBAC-2d"] = {
            {{cat_box("A", {10, 13}, 1), cat_box("B", {11, 14}, 1), cat_box("C", {9, 12}, 1)},
             {cat_arr("ABC", "ABC", {0, 0, 15}), cat_arr("ACB", "ACB", {0, 15, 17}),
              cat_arr("BCA", "BCA", {0, 15, 16}), cat_arr("CAB", "CAB", {0, 0, 0}),
              cat_arr("CBA", "CBA", {0, 0, 16})},
             true},
            "the 2D reduction of ex-butBAC, same five orders"};

        cat["ex-4-6-6"] = {
            {{cat_box("A", {4, 6, 6}, 1), cat_box("B", {5, 5, 7}, 1)},
             {cat_arr("natural", "AB", {0, 7}), cat_arr("reverse", "BA", {0, 8})},
             true},
            "a pair with repeated sides inside each box"};

        return cat;
    }();
    return entries;
}

}  // namespace gozinta
