// Copyright (c) gozinta contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gozinta/achieve.hpp"
#include "gozinta/core.hpp"
#include "gozinta/nesting.hpp"
#include "gozinta/perm.hpp"

namespace gozinta {

/// Outcome of a bounded integer search. BudgetExceeded is distinct from
/// NotFound: the space was not exhausted.
struct BruteResult {
    enum class Status { Found, NotFound, BudgetExceeded };
    Status status = Status::NotFound;
    std::optional<TrickInstance> instance;
    std::uint64_t configs_tested = 0;
};

namespace detail {

// all non-decreasing dim-tuples over 1..max_side, lexicographic
inline std::vector<std::vector<int>> sorted_tuples(std::size_t dim, int max_side) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(dim, 1);
    std::function<void(std::size_t, int)> gen = [&](std::size_t i, int lo) {
        if (i == dim) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= max_side; ++v) {
            cur[i] = v;
            gen(i + 1, v);
        }
    };
    gen(0, 1);
    return out;
}

// Greedy nesting check for fixed integer boxes. Presentations of one
// box form a chain under componentwise order (closed below every
// expansion, expansions ordered by amount), so taking the minimal valid
// presentation innermost-out decides the arrangement exactly.
struct IntConfig {
    const std::vector<const std::vector<int>*>* dims;  // per box, sorted
    const std::vector<std::size_t>* sides;             // per box, 1-based
};

// presented vector of box dims (sorted, side j removed, v inserted)
// strictly dominates w? No allocation.
inline bool presented_dominates(const std::vector<int>& dims, std::size_t j, int v,
                                const std::vector<int>& w) {
    const std::size_t n = dims.size();
    // walk presented components in sorted order
    std::size_t di = 0;       // next index in dims, skipping j-1
    bool placed = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (di == j - 1) ++di;  // skip the removed side
        int comp;
        if (!placed && (di >= n || dims[di] > v)) {
            comp = v;
            placed = true;
        } else {
            comp = dims[di++];
        }
        if (comp <= w[i]) return false;
    }
    return true;
}

inline bool closed_dominates(const std::vector<int>& dims, const std::vector<int>& w) {
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (dims[i] <= w[i]) return false;
    return true;
}

// Smallest integer amount in (side, 2*side] whose presented vector
// strictly dominates w, or 0 if none. rest = dims minus side j, so the
// amount inserted at position t needs rest to beat w's prefix before t
// and its shifted suffix after t.
inline int min_expansion(const std::vector<int>& dims, std::size_t j, const std::vector<int>& w) {
    const std::size_t n = dims.size();
    const int side = dims[j - 1];
    auto rest = [&](std::size_t i) { return i < j - 1 ? dims[i] : dims[i + 1]; };
    // prefix_ok(t): rest[i] > w[i] for all i < t
    // suffix_ok(t): rest[i-1] > w[i] for all i > t
    std::size_t prefix_limit = 0;
    while (prefix_limit < n - 1 && rest(prefix_limit) > w[prefix_limit]) ++prefix_limit;
    int best = 0;
    bool suffix_ok = true;
    for (std::size_t t = n; t-- > 0;) {
        if (t + 1 < n && !(rest(t) > w[t + 1])) suffix_ok = false;
        if (!suffix_ok) break;  // shrinking t only adds suffix conditions
        if (t > prefix_limit) continue;
        int v = std::max(side + 1, w[t] + 1);
        if (t > 0) v = std::max(v, rest(t - 1));
        if (t + 1 < n && v >= rest(t)) continue;  // would not land at position t
        if (v <= 2 * side && (best == 0 || v < best)) best = v;
    }
    return best;
}

// Minimal valid presentation of the box over w; returns false if none.
// amount == 0 encodes closed.
inline bool greedy_present(const std::vector<int>& dims, std::size_t j, const std::vector<int>& w,
                           int& amount, std::vector<int>& presented) {
    if (w.empty() || closed_dominates(dims, w)) {
        amount = 0;
        presented = dims;
        return true;
    }
    const int v = min_expansion(dims, j, w);
    if (v == 0) return false;
    amount = v;
    presented.clear();
    std::size_t di = 0;
    bool placed = false;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (di == j - 1) ++di;
        if (!placed && (di >= dims.size() || dims[di] > v)) {
            presented.push_back(v);
            placed = true;
        } else {
            presented.push_back(dims[di++]);
        }
    }
    return true;
}

// Reusable buffers: the greedy check runs around a billion times in the
// larger sweeps and must not allocate.
struct GreedyScratch {
    std::vector<int> w;
    std::vector<int> presented;
};

// amounts[pos-1] = 0 for closed, else the expansion amount
inline bool greedy_arrangement(const IntConfig& cfg, const std::vector<std::size_t>& order0,
                               std::vector<int>& amounts, GreedyScratch& scratch) {
    scratch.w.clear();
    amounts.assign(order0.size(), 0);
    for (std::size_t pos = 0; pos < order0.size(); ++pos) {
        const std::size_t b = order0[pos];
        int amount = 0;
        if (!greedy_present(*(*cfg.dims)[b], (*cfg.sides)[b], scratch.w, amount,
                            scratch.presented))
            return false;
        amounts[pos] = amount;
        std::swap(scratch.w, scratch.presented);
    }
    return true;
}

inline TrickInstance instance_from_config(const std::vector<const std::vector<int>*>& dims,
                                          const std::vector<std::size_t>& sides,
                                          const std::vector<Permutation>& perms,
                                          const std::vector<std::vector<int>>& amounts) {
    TrickInstance out;
    out.enforce_bound = true;
    const std::size_t k = dims.size();
    for (std::size_t b = 0; b < k; ++b) {
        BoxDesign box;
        box.label = default_label(b);
        std::vector<Scalar> s;
        for (int v : *dims[b]) s.emplace_back(v);
        box.dims = make_dims(std::move(s));
        box.expand_side = sides[b];
        out.boxes.push_back(std::move(box));
    }
    for (std::size_t p = 0; p < perms.size(); ++p) {
        Arrangement arr;
        arr.name = perms[p].to_string();
        for (std::size_t pos = 1; pos <= k; ++pos) {
            const std::size_t b = perms[p].at(pos) - 1;
            arr.order.push_back(default_label(b));
            arr.presentation[default_label(b)] =
                amounts[p][pos - 1] == 0 ? Presentation::make_closed()
                                         : Presentation::expanded(Scalar(amounts[p][pos - 1]));
        }
        out.arrangements.push_back(std::move(arr));
    }
    return out;
}

// last entry varies fastest; false once the odometer wraps
inline bool advance_odometer(std::vector<std::size_t>& v, std::size_t lo, std::size_t hi) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (++v[i] <= hi) return true;
        v[i] = lo;
    }
    return false;
}

// Visits every (dims, sides) configuration in lexicographic order
// (first box most significant, dims before sides). Returns false if fn
// stopped the scan. Templated: the visitor runs around a billion times
// in the larger sweeps.
template <class Visitor>
inline bool for_each_config(std::size_t k, std::size_t dim, int max_side, Visitor&& fn) {
    const auto tuples = sorted_tuples(dim, max_side);
    std::vector<std::size_t> ti(k, 0);
    std::vector<const std::vector<int>*> dims(k);
    std::vector<std::size_t> sides(k, 1);
    std::uint64_t index = 0;
    do {
        for (std::size_t b = 0; b < k; ++b) dims[b] = &tuples[ti[b]];
        std::fill(sides.begin(), sides.end(), 1);
        do {
            if (!fn(dims, sides, index)) return false;
            ++index;
        } while (advance_odometer(sides, 1, dim));
    } while (advance_odometer(ti, 0, tuples.size() - 1));
    return true;
}

}  // namespace detail

/// Exhaustive bounded integer search: sorted dims in [1, max_side]^dim
/// per box, one expand side per box, integer amounts within the
/// expansion bound. Returns the first instance in deterministic order
/// that nests in every requested arrangement, re-verified with the
/// bound enforced.
inline BruteResult brute_force_search(std::size_t k, std::size_t dim, int max_side,
                                      std::vector<Permutation> perms,
                                      std::optional<std::uint64_t> budget = {}) {
    if (max_side < 2) throw Error(Errc::MalformedSystem, "max_side must be at least 2");
    PermSpec spec = PermSpec::make(k, dim, std::move(perms));
    std::vector<std::vector<std::size_t>> orders;  // box index per position
    for (const auto& p : spec.perms) {
        std::vector<std::size_t> o;
        for (std::size_t pos = 1; pos <= k; ++pos) o.push_back(p.at(pos) - 1);
        orders.push_back(std::move(o));
    }

    BruteResult result;
    std::vector<std::vector<int>> amounts(spec.perms.size());
    detail::GreedyScratch scratch;
    bool exceeded = false;
    detail::for_each_config(
        k, dim, max_side,
        [&](const std::vector<const std::vector<int>*>& dims,
            const std::vector<std::size_t>& sides, std::uint64_t index) {
            if (budget && index >= *budget) {
                exceeded = true;
                return false;
            }
            ++result.configs_tested;
            detail::IntConfig cfg{&dims, &sides};
            for (std::size_t p = 0; p < orders.size(); ++p)
                if (!detail::greedy_arrangement(cfg, orders[p], amounts[p], scratch)) return true;
            TrickInstance inst = detail::instance_from_config(dims, sides, spec.perms, amounts);
            if (!verify_trick(inst).ok)
                throw Error(Errc::NotVerified, "greedy oracle instance failed verification");
            result.status = BruteResult::Status::Found;
            result.instance = std::move(inst);
            return false;
        });
    if (exceeded) result.status = BruteResult::Status::BudgetExceeded;
    return result;
}

/// One sweep answering every permutation subset at once: the distinct
/// sets of arrangements (as bitmasks over all_permutations(k)) some
/// configuration at this bound realizes simultaneously.
inline std::set<std::uint32_t> brute_realizable_masks(std::size_t k, std::size_t dim,
                                                      int max_side) {
    const auto perms = all_permutations(k);
    std::vector<std::vector<std::size_t>> orders;
    for (const auto& p : perms) {
        std::vector<std::size_t> o;
        for (std::size_t pos = 1; pos <= k; ++pos) o.push_back(p.at(pos) - 1);
        orders.push_back(std::move(o));
    }
    std::set<std::uint32_t> masks;
    std::vector<int> amounts;
    detail::GreedyScratch scratch;
    detail::for_each_config(k, dim, max_side,
                            [&](const std::vector<const std::vector<int>*>& dims,
                                const std::vector<std::size_t>& sides, std::uint64_t) {
                                detail::IntConfig cfg{&dims, &sides};
                                std::uint32_t mask = 0;
                                for (std::size_t p = 0; p < orders.size(); ++p)
                                    if (detail::greedy_arrangement(cfg, orders[p], amounts,
                                                                   scratch))
                                        mask |= (1u << p);
                                masks.insert(mask);
                                return true;
                            });
    return masks;
}

/// Deterministic sampled scan: visits every stride-th configuration
/// (decoded straight from its index, so skipped configurations cost
/// nothing) that realizes all requested arrangements and hands the
/// greedy instance to the callback.
inline void brute_scan(std::size_t k, std::size_t dim, int max_side,
                       std::vector<Permutation> perms, std::uint64_t stride,
                       const std::function<void(const TrickInstance&)>& fn) {
    if (stride == 0) stride = 1;
    PermSpec spec = PermSpec::make(k, dim, std::move(perms));
    std::vector<std::vector<std::size_t>> orders;
    for (const auto& p : spec.perms) {
        std::vector<std::size_t> o;
        for (std::size_t pos = 1; pos <= k; ++pos) o.push_back(p.at(pos) - 1);
        orders.push_back(std::move(o));
    }
    const auto tuples = detail::sorted_tuples(dim, max_side);
    std::uint64_t total = 1;
    for (std::size_t b = 0; b < k; ++b) total *= tuples.size() * dim;

    std::vector<std::vector<int>> amounts(spec.perms.size());
    detail::GreedyScratch scratch;
    std::vector<const std::vector<int>*> dims(k);
    std::vector<std::size_t> sides(k, 1);
    for (std::uint64_t index = 0; index < total; index += stride) {
        // decode: dims indices are the high digits, sides the low ones
        std::uint64_t rem = index;
        for (std::size_t b = k; b-- > 0;) {
            sides[b] = 1 + rem % dim;
            rem /= dim;
        }
        for (std::size_t b = k; b-- > 0;) {
            dims[b] = &tuples[rem % tuples.size()];
            rem /= tuples.size();
        }
        detail::IntConfig cfg{&dims, &sides};
        bool all_ok = true;
        for (std::size_t p = 0; p < orders.size() && all_ok; ++p)
            all_ok = detail::greedy_arrangement(cfg, orders[p], amounts[p], scratch);
        if (all_ok) fn(detail::instance_from_config(dims, sides, spec.perms, amounts));
    }
}

}  // namespace gozinta
