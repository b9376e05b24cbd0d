// Copyright (c) gozinta contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gozinta/core.hpp"
#include "gozinta/errors.hpp"

namespace gozinta {

/// One way of stacking the boxes: labels listed innermost to outermost,
/// plus how each box is presented in this stacking.
struct Arrangement {
    std::string name;
    std::vector<std::string> order;
    std::map<std::string, Presentation> presentation;

    const Presentation& presentation_of(const std::string& label) const {
        auto it = presentation.find(label);
        if (it == presentation.end())
            throw Error(Errc::UnknownLabel, "no presentation for box " + label);
        return it->second;
    }

    friend bool operator==(const Arrangement& a, const Arrangement& b) = default;
};

/// A full trick: the box designs plus every arrangement they are shown
/// in. enforce_bound controls whether expansion amounts are checked
/// against the twice-the-side limit.
struct TrickInstance {
    std::vector<BoxDesign> boxes;
    std::vector<Arrangement> arrangements;
    bool enforce_bound = true;

    const BoxDesign& box(const std::string& label) const {
        for (const auto& b : boxes)
            if (b.label == label) return b;
        throw Error(Errc::UnknownLabel, "no box labeled " + label);
    }
    bool has_box(const std::string& label) const {
        for (const auto& b : boxes)
            if (b.label == label) return true;
        return false;
    }

    friend bool operator==(const TrickInstance& a, const TrickInstance& b) = default;
};

/// A failed strict-domination check between two adjacent boxes.
struct Violation {
    std::size_t arrangement_index = 0;
    std::string inner;
    std::string outer;
    std::size_t coordinate = 0;  // 1-based
};

/// A presentation that could not be applied (missing expand side,
/// non-increasing amount, bound exceeded, bad labels).
struct PresentationError {
    std::size_t arrangement_index = 0;
    std::string label;
    std::string message;
};

struct VerifyReport {
    bool ok = true;
    std::vector<Violation> violations;
    std::vector<PresentationError> presentation_errors;

    std::string summary() const {
        if (ok) return "OK";
        std::string out;
        for (const auto& v : violations) {
            out += "arrangement #" + std::to_string(v.arrangement_index + 1) + ": " + v.outer +
                   " does not strictly exceed " + v.inner + " at coordinate " +
                   std::to_string(v.coordinate) + "\n";
        }
        for (const auto& e : presentation_errors) {
            out += "arrangement #" + std::to_string(e.arrangement_index + 1) + ": box " +
                   e.label + ": " + e.message + "\n";
        }
        return out;
    }
};

namespace detail {

inline void verify_one(const std::vector<BoxDesign>& boxes, const Arrangement& arr,
                       bool enforce_bound, std::size_t arr_index, VerifyReport& report) {
    auto find_box = [&](const std::string& label) -> const BoxDesign* {
        for (const auto& b : boxes)
            if (b.label == label) return &b;
        return nullptr;
    };

    std::set<std::string> seen;
    std::vector<std::pair<std::string, Dims>> presented;
    for (const auto& label : arr.order) {
        if (!seen.insert(label).second) {
            report.presentation_errors.push_back({arr_index, label, "label repeated in order"});
            report.ok = false;
            continue;
        }
        const BoxDesign* box = find_box(label);
        if (!box) {
            report.presentation_errors.push_back({arr_index, label, "unknown label"});
            report.ok = false;
            continue;
        }
        auto it = arr.presentation.find(label);
        if (it == arr.presentation.end()) {
            report.presentation_errors.push_back({arr_index, label, "no presentation entry"});
            report.ok = false;
            continue;
        }
        try {
            presented.emplace_back(label, presented_dims(*box, it->second, enforce_bound));
        } catch (const Error& e) {
            report.presentation_errors.push_back({arr_index, label, e.what()});
            report.ok = false;
        }
    }
    // adjacent strict domination; transitivity covers non-adjacent pairs
    for (std::size_t i = 0; i + 1 < presented.size(); ++i) {
        const auto& [inner_label, inner] = presented[i];
        const auto& [outer_label, outer] = presented[i + 1];
        if (inner.size() != outer.size()) {
            report.presentation_errors.push_back(
                {arr_index, outer_label, "dimension mismatch along the chain"});
            report.ok = false;
            continue;
        }
        for (std::size_t c = 1; c <= inner.size(); ++c) {
            if (!(outer[c] > inner[c])) {
                report.violations.push_back({arr_index, inner_label, outer_label, c});
                report.ok = false;
            }
        }
    }
}

}  // namespace detail

/// Checks one arrangement: every presentation valid, every adjacent
/// (inner, outer) pair strictly dominated componentwise. Collects all
/// failures instead of stopping at the first.
inline VerifyReport verify_arrangement(const std::vector<BoxDesign>& boxes,
                                       const Arrangement& arr, bool enforce_bound) {
    VerifyReport report;
    detail::verify_one(boxes, arr, enforce_bound, 0, report);
    return report;
}

/// Conjunction of verify_arrangement over every arrangement of the
/// instance, with violations tagged by arrangement index.
inline VerifyReport verify_trick(const TrickInstance& instance) {
    VerifyReport report;
    for (std::size_t i = 0; i < instance.arrangements.size(); ++i)
        detail::verify_one(instance.boxes, instance.arrangements[i], instance.enforce_bound, i,
                           report);
    return report;
}

/// Stack diagram: one line per box, outermost on top,
/// sides separated by " × ", the expanded side shown as "amount(original)"
/// at its sorted position. Byte-exact deterministic output.
inline std::string render_diagram(const std::vector<BoxDesign>& boxes, const Arrangement& arr) {
    auto find_box = [&](const std::string& label) -> const BoxDesign& {
        for (const auto& b : boxes)
            if (b.label == label) return b;
        throw Error(Errc::UnknownLabel, "no box labeled " + label);
    };
    std::string out;
    for (std::size_t i = arr.order.size(); i-- > 0;) {
        const std::string& label = arr.order[i];
        const BoxDesign& box = find_box(label);
        const Presentation& p = arr.presentation_of(label);
        Dims shown = presented_dims(box, p, /*enforce_bound=*/false);
        std::optional<std::size_t> amount_pos;
        if (!p.closed()) amount_pos = presented_rank(box, *p.amount);
        out += label + ":";
        for (std::size_t c = 1; c <= shown.size(); ++c) {
            out += c == 1 ? " " : " × ";
            out += shown[c].to_string();
            if (amount_pos && c == *amount_pos)
                out += "(" + box.dims[*box.expand_side].to_string() + ")";
        }
        out += "\n";
    }
    return out;
}

/// Renders every arrangement of an instance, preceded by its name.
inline std::string render_diagrams(const TrickInstance& instance) {
    std::string out;
    for (const auto& arr : instance.arrangements) {
        out += "[" + arr.name + "]\n";
        out += render_diagram(instance.boxes, arr);
    }
    return out;
}

/// True iff two equal-dimension boxes can each hold the other in some
/// order, choosing expansion sides and amounts freely. With the bound
/// off this is the smallest-side-expands reduction (the expanded side
/// may grow without limit); with the bound on, each candidate side is
/// tested at its maximal amount of twice the side.
inline bool pair_mutually_fits(const Dims& a, const Dims& b, bool enforce_bound) {
    if (a.size() != b.size())
        throw Error(Errc::DimensionMismatch, "boxes of different dimension");
    const std::size_t n = a.size();
    auto can_cover = [&](const Dims& outer, const Dims& inner) {
        if (strictly_dominates(outer, inner)) return true;
        if (!enforce_bound) {
            // expand the smallest side arbitrarily high: need the n-1
            // remaining sides to strictly exceed inner's first n-1
            for (std::size_t i = 1; i < n; ++i)
                if (!(outer[i + 1] > inner[i])) return false;
            return true;
        }
        for (std::size_t j = 1; j <= n; ++j) {
            // maximal legal expansion of side j
            std::vector<Scalar> sides;
            for (std::size_t i = 1; i <= n; ++i)
                sides.push_back(i == j ? Scalar(2) * outer[i] : outer[i]);
            std::sort(sides.begin(), sides.end());
            bool ok = true;
            for (std::size_t i = 0; i < n; ++i)
                if (!(sides[i] > inner[i + 1])) {
                    ok = false;
                    break;
                }
            if (ok) return true;
        }
        return false;
    };
    return can_cover(a, b) && can_cover(b, a);
}

/// One relation slot of a classification chain.
struct ChainLink {
    std::string lhs;   // "a1", "b2", ...
    std::string rhs;
    bool strict = false;   // template relation: < if true, <= if false
    bool equal = false;    // instantiated: values are equal
};

/// Result of classifying a mutually-nestable 3D pair by the relative
/// order of its six sides.
struct PairType {
    int type_id = 0;       // 1..4
    bool swapped = false;  // inputs were exchanged so that a1 <= b1
    std::vector<std::pair<std::string, Scalar>> values;  // chain order
    std::vector<ChainLink> chain;

    std::string chain_string() const {
        std::string out;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out += chain[i - 1].equal ? " = " : " < ";
            out += values[i].first;
        }
        return out;
    }
};

/// Classifies a mutually-nestable pair of 3D boxes into one of the four
/// side-order types. Inputs may arrive in either role; they are swapped
/// so the first box has the smaller smallest side. Chains are tested in
/// type order 1..4 and the first match wins, so boundary pairs with
/// permitted equalities land on the lowest-numbered type.
inline PairType classify_pair(const Dims& a_in, const Dims& b_in, bool enforce_bound = false) {
    if (a_in.size() != 3 || b_in.size() != 3)
        throw Error(Errc::DimensionMismatch, "pair classification is defined for 3D boxes");
    if (!pair_mutually_fits(a_in, b_in, enforce_bound))
        throw Error(Errc::NotMutuallyNestable, "the boxes cannot hold each other");

    bool swapped = b_in[1] < a_in[1];
    const Dims& a = swapped ? b_in : a_in;
    const Dims& b = swapped ? a_in : b_in;

    struct Slot {
        int side;      // 0 = a, 1 = b
        int index;     // 1..3
        bool strict;   // relation to the next slot
    };
    // chain templates; strictness belongs to the link after each slot
    static const std::vector<std::vector<Slot>> kTypes = {
        {{0, 1, false}, {1, 1, true}, {0, 2, false}, {1, 2, true}, {0, 3, false}, {1, 3, false}},
        {{0, 1, false}, {1, 1, true}, {0, 2, false}, {1, 2, false}, {1, 3, true}, {0, 3, false}},
        {{0, 1, false}, {1, 1, false}, {1, 2, true}, {0, 2, false}, {0, 3, false}, {1, 3, false}},
        {{0, 1, false}, {1, 1, false}, {1, 2, true}, {0, 2, true}, {1, 3, true}, {0, 3, false}},
    };

    auto value_of = [&](const Slot& s) -> const Scalar& {
        return s.side == 0 ? a[static_cast<std::size_t>(s.index)]
                           : b[static_cast<std::size_t>(s.index)];
    };
    auto name_of = [&](const Slot& s) {
        return std::string(s.side == 0 ? "a" : "b") + std::to_string(s.index);
    };

    for (std::size_t t = 0; t < kTypes.size(); ++t) {
        const auto& slots = kTypes[t];
        bool match = true;
        for (std::size_t i = 0; i + 1 < slots.size(); ++i) {
            const Scalar& x = value_of(slots[i]);
            const Scalar& y = value_of(slots[i + 1]);
            if (slots[i].strict ? !(x < y) : !(x <= y)) {
                match = false;
                break;
            }
        }
        if (!match) continue;
        PairType out;
        out.type_id = static_cast<int>(t) + 1;
        out.swapped = swapped;
        for (const auto& s : slots) out.values.emplace_back(name_of(s), value_of(s));
        for (std::size_t i = 0; i + 1 < slots.size(); ++i)
            out.chain.push_back({name_of(slots[i]), name_of(slots[i + 1]), slots[i].strict,
                                 value_of(slots[i]) == value_of(slots[i + 1])});
        for (std::size_t i = 0; i + 1 < out.chain.size(); ++i)
            if (out.chain[i].equal && out.chain[i + 1].equal)
                throw Error(Errc::AdjacentEqualities,
                            "two adjacent equalities in chain " + out.chain_string());
        return out;
    }
    throw Error(Errc::NotMutuallyNestable, "no chain matches despite mutual fit");
}

}  // namespace gozinta
