// Copyright (c) gozinta contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gozinta/core.hpp"
#include "gozinta/errors.hpp"
#include "gozinta/feasibility.hpp"
#include "gozinta/nesting.hpp"
#include "gozinta/perm.hpp"

namespace gozinta {

/// A search problem: k boxes of dimension dim that must nest in every
/// listed order simultaneously. The identity (natural) order is always
/// part of the set.
struct PermSpec {
    std::size_t boxes = 0;
    std::size_t dim = 0;
    std::vector<Permutation> perms;  // sorted, deduplicated, identity included

    static PermSpec make(std::size_t k, std::size_t n, std::vector<Permutation> ps) {
        if (k < 1) throw Error(Errc::MalformedSystem, "need at least one box");
        if (n < 2) throw Error(Errc::MalformedSystem, "dimension must be at least 2");
        for (const auto& p : ps)
            if (p.size() != k)
                throw Error(Errc::MalformedSystem, "permutation " + p.to_string() +
                                                       " is not on " + std::to_string(k) +
                                                       " elements");
        ps.push_back(Permutation::identity(k));
        std::sort(ps.begin(), ps.end());
        ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
        return PermSpec{k, n, std::move(ps)};
    }

    bool is_natural_reverse() const {
        return boxes >= 2 && perms.size() == 2 && perms[1] == Permutation::reverse(boxes);
    }
};

/// One discrete branch of the search: the expanding side of every box,
/// whether each box is closed or expanded in each arrangement, and the
/// sorted position the expanded value takes.
struct CaseAssignment {
    std::vector<std::size_t> expand_side;            // [box], 1-based
    std::vector<std::vector<bool>> expanded;         // [box][arrangement]
    std::vector<std::vector<std::size_t>> rank;      // [box][arrangement], valid when expanded

    friend bool operator==(const CaseAssignment& a, const CaseAssignment& b) = default;
};

inline std::string default_label(std::size_t index) {
    if (index < 26) return std::string(1, static_cast<char>('A' + index));
    return "B" + std::to_string(index + 1);
}

namespace detail {

// Per-(box, arrangement) choice encoding: 0 = closed, t >= 1 = expanded
// at rank side + t - 1.
inline std::size_t choice_count(std::size_t n, std::size_t side) { return n - side + 2; }
inline bool choice_expanded(std::size_t c) { return c > 0; }
inline std::size_t choice_rank(std::size_t side, std::size_t c) { return side + c - 1; }

// Choices at slot (box, arr). Unrestricted normally. Under the
// natural+reverse restriction: every box is closed in exactly one of
// the two arrangements, the innermost box of each arrangement closed,
// the outermost expanded. arr0_expanded is the choice already taken at
// arrangement 0 (meaningful for arr == 1).
inline std::vector<std::size_t> allowed_choices(bool normalize, std::size_t n, std::size_t k,
                                                std::size_t b, std::size_t p, std::size_t side,
                                                bool arr0_expanded) {
    std::vector<std::size_t> out;
    const std::size_t cc = choice_count(n, side);
    bool closed_ok = true, expanded_ok = true;
    if (normalize) {
        const bool forced_closed = p == 0 ? b == 0 : b == k - 1;
        const bool forced_expanded = p == 0 ? b == k - 1 : b == 0;
        if (forced_closed) expanded_ok = false;
        else if (forced_expanded) closed_ok = false;
        else if (p == 1) {
            closed_ok = arr0_expanded;
            expanded_ok = !arr0_expanded;
        }
    }
    if (closed_ok) out.push_back(0);
    if (expanded_ok)
        for (std::size_t c = 1; c < cc; ++c) out.push_back(c);
    return out;
}

}  // namespace detail

/// Total number of case assignments for a spec.
inline std::uint64_t case_count(const PermSpec& spec, bool normalize) {
    const std::size_t n = spec.dim;
    const std::size_t m = spec.perms.size();
    const std::size_t k = spec.boxes;
    if (normalize && !spec.is_natural_reverse())
        throw Error(Errc::NormalizeUnsupported,
                    "normalization applies only to the {identity, reverse} problem");
    std::uint64_t total = 1;
    for (std::size_t b = 0; b < k; ++b) {
        std::uint64_t per_box = 0;
        for (std::size_t j = 1; j <= n; ++j) {
            if (!normalize) {
                std::uint64_t c = 1;
                for (std::size_t p = 0; p < m; ++p) c *= detail::choice_count(n, j);
                per_box += c;
            } else {
                std::uint64_t ranks = n - j + 1;
                bool endpoint = b == 0 || b == k - 1;
                per_box += endpoint ? ranks : 2 * ranks;
            }
        }
        total *= per_box;
    }
    return total;
}

/// Visits every case assignment in lexicographic order (box-major:
/// expand side, then the per-arrangement choices). Return false from
/// the callback to stop early.
inline void for_each_case(const PermSpec& spec, bool normalize,
                          const std::function<bool(const CaseAssignment&)>& fn) {
    const std::size_t n = spec.dim;
    const std::size_t m = spec.perms.size();
    const std::size_t k = spec.boxes;
    if (normalize && !spec.is_natural_reverse())
        throw Error(Errc::NormalizeUnsupported,
                    "normalization applies only to the {identity, reverse} problem");

    CaseAssignment cur;
    cur.expand_side.assign(k, 1);
    cur.expanded.assign(k, std::vector<bool>(m, false));
    cur.rank.assign(k, std::vector<std::size_t>(m, 0));
    bool stop = false;

    auto allowed = [&](std::size_t b, std::size_t p, std::size_t side) {
        return detail::allowed_choices(normalize, n, k, b, p, side, cur.expanded[b][0]);
    };

    std::function<void(std::size_t, std::size_t)> walk_slots =
        [&](std::size_t b, std::size_t p) {
            if (stop) return;
            if (p == m) {
                if (b + 1 == k) {
                    if (!fn(cur)) stop = true;
                } else {
                    for (std::size_t j = 1; j <= n && !stop; ++j) {
                        cur.expand_side[b + 1] = j;
                        walk_slots(b + 1, 0);
                    }
                }
                return;
            }
            for (std::size_t c : allowed(b, p, cur.expand_side[b])) {
                if (stop) return;
                cur.expanded[b][p] = detail::choice_expanded(c);
                cur.rank[b][p] =
                    detail::choice_expanded(c) ? detail::choice_rank(cur.expand_side[b], c) : 0;
                walk_slots(b, p + 1);
            }
        };
    for (std::size_t j = 1; j <= n && !stop; ++j) {
        cur.expand_side[0] = j;
        walk_slots(0, 0);
    }
}

/// Materialized deterministic case sequence. Intended for small specs;
/// prefer for_each_case for sweeps.
inline std::vector<CaseAssignment> enumerate_cases(const PermSpec& spec, bool normalize) {
    std::vector<CaseAssignment> out;
    for_each_case(spec, normalize, [&](const CaseAssignment& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

/// A case's linear system plus the variable indexing used to read a
/// witness back out.
struct CaseSystem {
    LinearSystem sys;
    std::vector<std::vector<std::size_t>> x;            // [box][side-1]
    std::vector<std::vector<std::size_t>> amount;       // [box][arr]; npos when closed
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Builds the strict linear system of one case: per-box sortedness and
/// positivity, expansion strictness and rank placement for every
/// expanded instance, and componentwise strict domination along every
/// arrangement chain. The expansion bound is deliberately absent; it is
/// restored on witnesses by shifting afterwards.
inline CaseSystem case_to_system(const CaseAssignment& cas, const PermSpec& spec) {
    const std::size_t n = spec.dim;
    const std::size_t m = spec.perms.size();
    const std::size_t k = spec.boxes;
    if (cas.expand_side.size() != k || cas.expanded.size() != k || cas.rank.size() != k)
        throw Error(Errc::InconsistentCase, "case does not match the search problem's box count");

    CaseSystem out;
    out.x.assign(k, {});
    out.amount.assign(k, std::vector<std::size_t>(m, CaseSystem::npos));
    for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t i = 1; i <= n; ++i)
            out.x[b].push_back(out.sys.add_variable(default_label(b) + std::to_string(i)));
    }
    for (std::size_t b = 0; b < k; ++b) {
        const std::size_t j = cas.expand_side[b];
        if (j < 1 || j > n) throw Error(Errc::InconsistentCase, "expand side out of range");
        for (std::size_t p = 0; p < m; ++p) {
            if (!cas.expanded[b][p]) continue;
            const std::size_t r = cas.rank[b][p];
            if (r < j || r > n)
                throw Error(Errc::InconsistentCase, "rank below the expanding side");
            out.amount[b][p] = out.sys.add_variable(default_label(b) + "'" +
                                                    spec.perms[p].to_string());
        }
    }

    for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t i = 1; i <= n; ++i) out.sys.add_lower_bound(out.x[b][i - 1], Rational(1));
        for (std::size_t i = 1; i < n; ++i)
            out.sys.add_less(out.x[b][i - 1], out.x[b][i], Rel::LessEq);
        const std::size_t j = cas.expand_side[b];
        for (std::size_t p = 0; p < m; ++p) {
            if (!cas.expanded[b][p]) continue;
            const std::size_t e = out.amount[b][p];
            const std::size_t r = cas.rank[b][p];
            out.sys.add_less(out.x[b][j - 1], e, Rel::Less);
            if (r > j) out.sys.add_less(out.x[b][r - 1], e, Rel::LessEq);
            if (r < n) out.sys.add_less(e, out.x[b][r], Rel::LessEq);
        }
    }

    // presented component i (1-based) of box b in arrangement p
    auto component = [&](std::size_t b, std::size_t p, std::size_t i) -> std::size_t {
        if (!cas.expanded[b][p]) return out.x[b][i - 1];
        const std::size_t j = cas.expand_side[b];
        const std::size_t r = cas.rank[b][p];
        if (i == r) return out.amount[b][p];
        if (i < j || i > r) return out.x[b][i - 1];
        return out.x[b][i];  // j <= i < r: sides shift down by one
    };

    for (std::size_t p = 0; p < m; ++p) {
        const Permutation& perm = spec.perms[p];
        for (std::size_t pos = 1; pos < k; ++pos) {
            const std::size_t inner = perm.at(pos) - 1;
            const std::size_t outer = perm.at(pos + 1) - 1;
            for (std::size_t i = 1; i <= n; ++i)
                out.sys.add_less(component(inner, p, i), component(outer, p, i), Rel::Less);
        }
    }
    return out;
}

namespace detail {

// Incremental all-pairs closure over difference constraints with unit
// constants and strictness tracking. Weights are packed as
// c * 2^20 - strict_count so lexicographic tightness is plain int64
// comparison. Edge (u -> v, w) encodes value(v) - value(u) <= w.
class DiffClosure {
public:
    static constexpr std::int64_t kInf = (INT64_C(1) << 56);
    static std::int64_t pack(std::int64_t c, std::int64_t strict) {
        return c * (INT64_C(1) << 20) - strict;
    }

    explicit DiffClosure(std::size_t nodes) : n_(nodes), d_(nodes * nodes, kInf) {
        for (std::size_t i = 0; i < n_; ++i) at(i, i) = 0;
    }

    void checkpoint() { marks_.push_back(log_.size()); }

    void rollback() {
        std::size_t mark = marks_.back();
        marks_.pop_back();
        while (log_.size() > mark) {
            const auto& [idx, old] = log_.back();
            d_[idx] = old;
            log_.pop_back();
        }
        bad_ = false;
    }

    bool bad() const { return bad_; }

    /// Adds one constraint edge; returns false if the system became
    /// infeasible (matrix may then be partially updated until rollback).
    bool add_edge(std::size_t u, std::size_t v, std::int64_t w) {
        if (bad_) return false;
        if (at(v, u) != kInf && at(v, u) + w < 0) {
            bad_ = true;
            return false;
        }
        if (w >= at(u, v)) return true;
        for (std::size_t i = 0; i < n_; ++i) {
            const std::int64_t diu = at(i, u);
            if (diu == kInf) continue;
            const std::int64_t base = diu + w;
            for (std::size_t j = 0; j < n_; ++j) {
                const std::int64_t dvj = at(v, j);
                if (dvj == kInf) continue;
                const std::int64_t cand = base + dvj;
                std::int64_t& cell = at(i, j);
                if (cand < cell) {
                    log_.emplace_back(i * n_ + j, cell);
                    cell = cand;
                    if (i == j && cand < 0) {
                        bad_ = true;
                        return false;
                    }
                }
            }
        }
        return true;
    }

private:
    std::size_t n_;
    std::vector<std::int64_t> d_;
    std::vector<std::pair<std::size_t, std::int64_t>> log_;
    std::vector<std::size_t> marks_;
    bool bad_ = false;

    std::int64_t& at(std::size_t i, std::size_t j) { return d_[i * n_ + j]; }
};

// DFS search state shared by the find-first search and the exhaustive
// sweep. Node ids: 0 = origin (fixed zero), base sides, then one amount
// slot per (box, arrangement).
struct CaseSearch {
    const PermSpec& spec;
    bool normalize;
    std::size_t n, m, k;
    DiffClosure closure;
    std::vector<std::vector<std::size_t>> pos_of_box;    // [arr][box] -> position 1..k
    std::vector<std::uint64_t> box_weight;               // per-box case count
    std::vector<std::uint64_t> suffix_weight;            // product of box_weight for boxes > b
    CaseAssignment cur;

    explicit CaseSearch(const PermSpec& s, bool norm)
        : spec(s),
          normalize(norm),
          n(s.dim),
          m(s.perms.size()),
          k(s.boxes),
          closure(1 + s.boxes * s.dim + s.boxes * s.perms.size()) {
        if (normalize && !spec.is_natural_reverse())
            throw Error(Errc::NormalizeUnsupported,
                        "normalization applies only to the {identity, reverse} problem");
        pos_of_box.assign(m, std::vector<std::size_t>(k, 0));
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t pos = 1; pos <= k; ++pos)
                pos_of_box[p][spec.perms[p].at(pos) - 1] = pos;
        box_weight.assign(k, 0);
        for (std::size_t b = 0; b < k; ++b) {
            std::uint64_t per_box = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (!normalize) {
                    std::uint64_t c = 1;
                    for (std::size_t p = 0; p < m; ++p) c *= choice_count(n, j);
                    per_box += c;
                } else {
                    std::uint64_t ranks = n - j + 1;
                    per_box += (b == 0 || b == k - 1) ? ranks : 2 * ranks;
                }
            }
            box_weight[b] = per_box;
        }
        suffix_weight.assign(k + 1, 1);
        for (std::size_t b = k; b-- > 0;) suffix_weight[b] = suffix_weight[b + 1] * box_weight[b];

        cur.expand_side.assign(k, 1);
        cur.expanded.assign(k, std::vector<bool>(m, false));
        cur.rank.assign(k, std::vector<std::size_t>(m, 0));

        closure.checkpoint();
        for (std::size_t b = 0; b < k; ++b) {
            for (std::size_t i = 1; i <= n; ++i) closure.add_edge(xnode(b, i), 0, -1);
            for (std::size_t i = 1; i < n; ++i)
                closure.add_edge(xnode(b, i + 1), xnode(b, i), DiffClosure::pack(0, 0));
        }
    }

    std::size_t xnode(std::size_t b, std::size_t i) const { return 1 + b * n + (i - 1); }
    std::size_t enode(std::size_t b, std::size_t p) const { return 1 + k * n + b * m + p; }

    std::size_t component(std::size_t b, std::size_t p, std::size_t i) const {
        if (!cur.expanded[b][p]) return xnode(b, i);
        const std::size_t j = cur.expand_side[b];
        const std::size_t r = cur.rank[b][p];
        if (i == r) return enode(b, p);
        if (i < j || i > r) return xnode(b, i);
        return xnode(b, i + 1);
    }

    // Applies slot (b, p)'s edges under the current choice; returns
    // feasible. A checkpoint must already be open.
    bool push_slot_edges(std::size_t b, std::size_t p) {
        if (cur.expanded[b][p]) {
            const std::size_t j = cur.expand_side[b];
            const std::size_t r = cur.rank[b][p];
            const std::size_t e = enode(b, p);
            if (!closure.add_edge(e, xnode(b, j), DiffClosure::pack(0, 1))) return false;
            if (r > j && !closure.add_edge(e, xnode(b, r), DiffClosure::pack(0, 0))) return false;
            if (r < n && !closure.add_edge(xnode(b, r + 1), e, DiffClosure::pack(0, 0)))
                return false;
        }
        // domination against already-assigned neighbors in this arrangement
        const std::size_t pos = pos_of_box[p][b];
        for (int dir = -1; dir <= 1; dir += 2) {
            const std::size_t npos_ = pos + static_cast<std::size_t>(dir);
            if (npos_ < 1 || npos_ > k) continue;
            const std::size_t nb = spec.perms[p].at(npos_) - 1;
            if (nb >= b) continue;  // not yet assigned
            const std::size_t inner = dir < 0 ? nb : b;
            const std::size_t outer = dir < 0 ? b : nb;
            for (std::size_t i = 1; i <= n; ++i)
                if (!closure.add_edge(component(outer, p, i), component(inner, p, i),
                                      DiffClosure::pack(0, 1)))
                    return false;
        }
        return true;
    }

    std::vector<std::size_t> allowed(std::size_t b, std::size_t p) const {
        return allowed_choices(normalize, n, k, b, p, cur.expand_side[b], cur.expanded[b][0]);
    }

    // Leaves under one choice at slot (b, p): remaining slots of box b
    // times full weights of later boxes.
    std::uint64_t leaves_below_choice(std::size_t b, std::size_t p) const {
        std::uint64_t within = 1;
        if (!normalize) {
            for (std::size_t q = p + 1; q < m; ++q)
                within *= choice_count(n, cur.expand_side[b]);
        } else if (p == 0) {
            // exactly-one-closed forces the second arrangement's state
            within = cur.expanded[b][0] ? 1 : n - cur.expand_side[b] + 1;
        }
        return within * suffix_weight[b + 1];
    }
};

}  // namespace detail

/// Witness or exhaustion. cases_checked counts leaf cases covered:
/// the lexicographic index of the witness when found, the full case
/// space otherwise.
struct SearchResult {
    bool found = false;
    TrickInstance witness;
    CaseAssignment assignment;
    std::uint64_t case_index = 0;
    std::uint64_t cases_checked = 0;
};

/// Full-sweep report for impossibility verification.
struct ImpossibilityReport {
    std::uint64_t cases_total = 0;
    std::uint64_t feasible_cases = 0;
    bool all_infeasible = false;
};

namespace detail {

inline TrickInstance instance_from_assignment(const PermSpec& spec, const CaseAssignment& cas,
                                              const CaseSystem& built,
                                              const std::vector<Rational>& values) {
    // scale to integers; the systems are scale-free above the unit floor
    BigInt lcm(1);
    for (const auto& v : values) lcm = lcm / BigInt::gcd(lcm, v.den()) * v.den();
    const Rational scale(lcm, BigInt(1));

    TrickInstance out;
    out.enforce_bound = false;
    for (std::size_t b = 0; b < spec.boxes; ++b) {
        std::vector<Scalar> sides;
        for (std::size_t i = 0; i < spec.dim; ++i)
            sides.push_back(values[built.x[b][i]] * scale);
        BoxDesign box;
        box.label = default_label(b);
        box.dims = make_dims(std::move(sides));
        box.expand_side = cas.expand_side[b];
        out.boxes.push_back(std::move(box));
    }
    for (std::size_t p = 0; p < spec.perms.size(); ++p) {
        Arrangement arr;
        arr.name = spec.perms[p].to_string();
        for (std::size_t pos = 1; pos <= spec.boxes; ++pos)
            arr.order.push_back(default_label(spec.perms[p].at(pos) - 1));
        for (std::size_t b = 0; b < spec.boxes; ++b) {
            arr.presentation[default_label(b)] =
                cas.expanded[b][p]
                    ? Presentation::expanded(values[built.amount[b][p]] * scale)
                    : Presentation::make_closed();
        }
        out.arrangements.push_back(std::move(arr));
    }
    return out;
}

// Lexicographic DFS with subtree pruning. Returns true when fn asked to
// stop (find-first mode). covered accumulates leaves accounted for.
inline bool dfs_case_search(CaseSearch& cs, std::size_t b, std::size_t p,
                            std::uint64_t& covered, std::uint64_t& feasible_leaves,
                            const std::function<bool(const CaseAssignment&)>& on_feasible_leaf) {
    if (p == cs.m) {
        if (b + 1 == cs.k) {
            ++covered;
            ++feasible_leaves;
            return !on_feasible_leaf(cs.cur);
        }
        for (std::size_t j = 1; j <= cs.n; ++j) {
            cs.cur.expand_side[b + 1] = j;
            if (dfs_case_search(cs, b + 1, 0, covered, feasible_leaves, on_feasible_leaf))
                return true;
        }
        return false;
    }
    for (std::size_t c : cs.allowed(b, p)) {
        cs.cur.expanded[b][p] = detail::choice_expanded(c);
        cs.cur.rank[b][p] = detail::choice_expanded(c)
                                ? detail::choice_rank(cs.cur.expand_side[b], c)
                                : 0;
        cs.closure.checkpoint();
        if (cs.push_slot_edges(b, p)) {
            if (dfs_case_search(cs, b, p + 1, covered, feasible_leaves, on_feasible_leaf)) {
                cs.closure.rollback();
                return true;
            }
        } else {
            covered += cs.leaves_below_choice(b, p);
        }
        cs.closure.rollback();
    }
    return false;
}

inline std::size_t thread_budget() {
    if (const char* env = std::getenv("GOZINTA_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return static_cast<std::size_t>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

}  // namespace detail

/// Scans cases in lexicographic order and returns the first feasible
/// one as a re-verified witness (bound off), or proves every case
/// infeasible. Infeasible subtrees are pruned wholesale: a partial
/// assignment's constraints are a subset of every completion's, so its
/// infeasibility covers the subtree.
inline SearchResult jointly_achievable(const PermSpec& spec, bool normalize = false) {
    detail::CaseSearch cs(spec, normalize);
    SearchResult result;
    std::uint64_t covered = 0, feasible = 0;
    std::optional<CaseAssignment> hit;
    for (std::size_t j = 1; j <= spec.dim && !hit; ++j) {
        cs.cur.expand_side[0] = j;
        if (detail::dfs_case_search(cs, 0, 0, covered, feasible,
                                    [&](const CaseAssignment& cas) {
                                        hit = cas;
                                        return false;  // stop
                                    }))
            break;
    }
    if (!hit) {
        if (covered != case_count(spec, normalize))
            throw Error(Errc::InconsistentCase,
                        "case coverage mismatch: covered " + std::to_string(covered) + " of " +
                            std::to_string(case_count(spec, normalize)));
        result.found = false;
        result.cases_checked = covered;
        return result;
    }
    CaseSystem built = case_to_system(*hit, spec);
    FeasibilityResult fr = solve(built.sys);
    if (!fr.feasible)
        throw Error(Errc::InconsistentCase,
                    "closure and elimination solvers disagree on a case");
    if (!check_witness(built.sys, fr.assignment))
        throw Error(Errc::InconsistentCase, "solver witness fails its own system");
    result.found = true;
    result.assignment = *hit;
    result.case_index = covered - 1;
    result.cases_checked = covered;
    result.witness = detail::instance_from_assignment(spec, *hit, built, fr.assignment);
    VerifyReport check = verify_trick(result.witness);
    if (!check.ok)
        throw Error(Errc::NotVerified, "engine witness failed re-verification:\n" +
                                           check.summary());
    return result;
}

/// Single-permutation convenience: is the given order reachable from
/// the natural order with one box set?
inline SearchResult achievable(const PermSpec& spec, bool normalize = false) {
    return jointly_achievable(spec, normalize);
}

/// Exhausts the whole unnormalized case space and reports whether every
/// case is infeasible. Parallelized over first-box assignments; counts
/// are order-independent.
inline ImpossibilityReport verify_impossibility(std::size_t k, std::size_t dim,
                                                std::vector<Permutation> perms,
                                                std::size_t threads = 0) {
    PermSpec spec = PermSpec::make(k, dim, std::move(perms));
    ImpossibilityReport report;
    report.cases_total = case_count(spec, false);

    // enumerate first-box assignments as parallel work units
    struct Prefix {
        std::size_t side;
        std::vector<bool> expanded;
        std::vector<std::size_t> rank;
    };
    std::vector<Prefix> prefixes;
    {
        detail::CaseSearch probe(spec, false);
        std::function<void(std::size_t)> gen = [&](std::size_t p) {
            if (p == probe.m) {
                prefixes.push_back(
                    {probe.cur.expand_side[0], probe.cur.expanded[0], probe.cur.rank[0]});
                return;
            }
            for (std::size_t c : probe.allowed(0, p)) {
                probe.cur.expanded[0][p] = detail::choice_expanded(c);
                probe.cur.rank[0][p] = detail::choice_expanded(c)
                                           ? detail::choice_rank(probe.cur.expand_side[0], c)
                                           : 0;
                gen(p + 1);
            }
        };
        for (std::size_t j = 1; j <= probe.n; ++j) {
            probe.cur.expand_side[0] = j;
            gen(0);
        }
    }

    if (threads == 0) threads = detail::thread_budget();
    threads = std::min<std::size_t>(std::max<std::size_t>(threads, 1), prefixes.size());

    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> covered{0}, feasible{0};

    auto scan_prefix = [&](detail::CaseSearch& cs, const Prefix& pre, std::uint64_t& cov,
                           std::uint64_t& feas) {
        cs.cur.expand_side[0] = pre.side;
        std::size_t pushed = 0;
        bool alive = true;
        for (std::size_t p = 0; p < cs.m; ++p) {
            cs.cur.expanded[0][p] = pre.expanded[p];
            cs.cur.rank[0][p] = pre.rank[p];
            cs.closure.checkpoint();
            ++pushed;
            if (!cs.push_slot_edges(0, p)) {
                cov += cs.suffix_weight[1];
                alive = false;
                break;
            }
        }
        if (alive) {
            if (cs.k == 1) {
                ++cov;
                ++feas;
            } else {
                for (std::size_t j = 1; j <= cs.n; ++j) {
                    cs.cur.expand_side[1] = j;
                    detail::dfs_case_search(cs, 1, 0, cov, feas,
                                            [](const CaseAssignment&) { return true; });
                }
            }
        }
        while (pushed--) cs.closure.rollback();
    };

    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&]() {
            detail::CaseSearch cs(spec, false);
            std::uint64_t cov = 0, feas = 0;
            for (;;) {
                std::size_t idx = next.fetch_add(1);
                if (idx >= prefixes.size()) break;
                scan_prefix(cs, prefixes[idx], cov, feas);
            }
            covered += cov;
            feasible += feas;
        });
    }
    for (auto& th : pool) th.join();

    report.feasible_cases = feasible.load();
    report.all_infeasible = feasible.load() == 0;
    if (covered.load() != report.cases_total)
        throw Error(Errc::InconsistentCase,
                    "case coverage mismatch: covered " + std::to_string(covered.load()) +
                        " of " + std::to_string(report.cases_total));
    return report;
}

/// Per-arrangement closed/expanded string, innermost first.
inline std::vector<std::string> pattern_report(const TrickInstance& witness) {
    VerifyReport check = verify_trick(witness);
    if (!check.ok)
        throw Error(Errc::NotVerified, "instance does not verify:\n" + check.summary());
    std::vector<std::string> out;
    for (const auto& arr : witness.arrangements) {
        std::string pat;
        for (const auto& label : arr.order)
            pat.push_back(arr.presentation_of(label).closed() ? 'C' : 'E');
        out.push_back(std::move(pat));
    }
    return out;
}

}  // namespace gozinta
