// Copyright (c) gozinta contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gozinta/errors.hpp"
#include "gozinta/rational.hpp"

namespace gozinta {

enum class Rel { Less, LessEq };

/// One linear constraint: sum(coeff_i * var_i) REL rhs.
struct LinearConstraint {
    std::vector<std::pair<std::size_t, Rational>> terms;
    Rel rel = Rel::LessEq;
    Rational rhs;
};

/// A system of strict and non-strict linear inequalities over exact
/// rationals. Variables are referred to by index; names exist for
/// reporting and witness maps.
class LinearSystem {
public:
    std::size_t add_variable(std::string name) {
        names_.push_back(std::move(name));
        return names_.size() - 1;
    }

    void add_constraint(std::vector<std::pair<std::size_t, Rational>> terms, Rel rel,
                        Rational rhs) {
        std::map<std::size_t, Rational> merged;
        for (auto& [v, c] : terms) {
            if (v >= names_.size())
                throw Error(Errc::MalformedSystem,
                            "constraint references undeclared variable #" + std::to_string(v));
            merged[v] += c;
        }
        LinearConstraint out;
        for (auto& [v, c] : merged)
            if (!c.is_zero()) out.terms.emplace_back(v, c);
        out.rel = rel;
        out.rhs = std::move(rhs);
        constraints_.push_back(std::move(out));
    }

    /// lhs_var REL rhs_var (difference constraint convenience).
    void add_less(std::size_t a, std::size_t b, Rel rel = Rel::Less) {
        add_constraint({{a, Rational(1)}, {b, Rational(-1)}}, rel, Rational(0));
    }
    /// var >= bound.
    void add_lower_bound(std::size_t v, Rational bound, Rel rel = Rel::LessEq) {
        add_constraint({{v, Rational(-1)}}, rel, -bound);
    }
    /// var <= bound.
    void add_upper_bound(std::size_t v, Rational bound, Rel rel = Rel::LessEq) {
        add_constraint({{v, Rational(1)}}, rel, std::move(bound));
    }

    std::size_t variable_count() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<LinearConstraint>& constraints() const { return constraints_; }

private:
    std::vector<std::string> names_;
    std::vector<LinearConstraint> constraints_;
};

/// Feasible with an exact witness (indexed like the system's variables),
/// or infeasible.
struct FeasibilityResult {
    bool feasible = false;
    std::vector<Rational> assignment;

    std::map<std::string, Rational> assignment_map(const LinearSystem& sys) const {
        std::map<std::string, Rational> out;
        for (std::size_t i = 0; i < assignment.size(); ++i) out[sys.names()[i]] = assignment[i];
        return out;
    }
};

/// Exact evaluation of every constraint at the given point.
inline bool check_witness(const LinearSystem& sys, const std::vector<Rational>& assignment) {
    if (assignment.size() != sys.variable_count())
        throw Error(Errc::MissingVariable,
                    "assignment covers " + std::to_string(assignment.size()) + " of " +
                        std::to_string(sys.variable_count()) + " variables");
    for (const auto& c : sys.constraints()) {
        Rational lhs(0);
        for (const auto& [v, coeff] : c.terms) lhs += coeff * assignment[v];
        if (c.rel == Rel::Less ? !(lhs < c.rhs) : !(lhs <= c.rhs)) return false;
    }
    return true;
}

namespace detail {

// Dense inequality row: coeffs . x  (<|<=)  rhs.
struct Row {
    std::vector<Rational> coeffs;
    bool strict = false;
    Rational rhs;
};

// Scale to coprime integer coefficients, positive factor only (sign and
// relation are preserved). Gives rows a canonical shape for subsumption.
inline void canonicalize(Row& row) {
    BigInt den_lcm(1);
    for (const auto& c : row.coeffs)
        if (!c.is_zero()) den_lcm = den_lcm / BigInt::gcd(den_lcm, c.den()) * c.den();
    if (!row.rhs.is_zero()) den_lcm = den_lcm / BigInt::gcd(den_lcm, row.rhs.den()) * row.rhs.den();
    BigInt num_gcd(0);
    Rational scale(den_lcm, BigInt(1));
    for (const auto& c : row.coeffs)
        if (!c.is_zero()) num_gcd = BigInt::gcd(num_gcd, (c * scale).num().abs());
    if (!row.rhs.is_zero()) num_gcd = BigInt::gcd(num_gcd, (row.rhs * scale).num().abs());
    if (num_gcd.is_zero()) num_gcd = BigInt(1);
    Rational factor = scale / Rational(num_gcd, BigInt(1));
    for (auto& c : row.coeffs) c *= factor;
    row.rhs *= factor;
}

}  // namespace detail

/// Decides feasibility by Fourier-Motzkin elimination with exact
/// rational arithmetic. Strict inequalities are combined natively
/// (strict + anything = strict). Returns a deterministic witness when
/// feasible: variables are eliminated last-to-first and assigned
/// first-to-last, preferring an attained lower bound, else the interval
/// midpoint, else a unit step inside an open half-line.
inline FeasibilityResult solve(const LinearSystem& sys) {
    using detail::Row;
    const std::size_t n = sys.variable_count();

    std::vector<Row> rows;
    rows.reserve(sys.constraints().size());
    bool constant_violation = false;
    auto note_constant = [&](const Row& r) {
        // all-zero coefficients: 0 (<|<=) rhs
        if (r.strict ? !(Rational(0) < r.rhs) : !(Rational(0) <= r.rhs))
            constant_violation = true;
    };

    for (const auto& c : sys.constraints()) {
        Row r;
        r.coeffs.assign(n, Rational(0));
        for (const auto& [v, coeff] : c.terms) r.coeffs[v] += coeff;
        r.strict = c.rel == Rel::Less;
        r.rhs = c.rhs;
        detail::canonicalize(r);
        bool all_zero = std::all_of(r.coeffs.begin(), r.coeffs.end(),
                                    [](const Rational& x) { return x.is_zero(); });
        if (all_zero)
            note_constant(r);
        else
            rows.push_back(std::move(r));
    }
    if (constant_violation) return {};

    // layers[i] holds the system in which x_i is the highest live variable.
    std::vector<std::vector<Row>> layers(n);

    auto subsume = [](std::vector<Row>& rs) {
        // keep only the tightest rhs per coefficient vector; strict wins ties
        std::map<std::vector<Rational>, std::pair<Rational, bool>> best;
        for (auto& r : rs) {
            auto it = best.find(r.coeffs);
            if (it == best.end()) {
                best.emplace(r.coeffs, std::make_pair(r.rhs, r.strict));
            } else if (r.rhs < it->second.first ||
                       (r.rhs == it->second.first && r.strict && !it->second.second)) {
                it->second = {r.rhs, r.strict};
            }
        }
        std::vector<Row> out;
        out.reserve(best.size());
        for (auto& [coeffs, rhs_strict] : best)
            out.push_back(Row{coeffs, rhs_strict.second, rhs_strict.first});
        rs = std::move(out);
    };

    subsume(rows);
    for (std::size_t vi = n; vi-- > 0;) {
        layers[vi] = rows;
        std::vector<Row> lower, upper, rest;
        for (auto& r : rows) {
            if (r.coeffs[vi].is_zero())
                rest.push_back(std::move(r));
            else if (r.coeffs[vi] > Rational(0))
                upper.push_back(std::move(r));
            else
                lower.push_back(std::move(r));
        }
        for (const auto& lo : lower) {
            for (const auto& up : upper) {
                Row combo;
                combo.coeffs.assign(n, Rational(0));
                const Rational a = up.coeffs[vi];         // > 0
                const Rational b = -lo.coeffs[vi];        // > 0
                for (std::size_t j = 0; j < n; ++j)
                    combo.coeffs[j] = up.coeffs[j] * b + lo.coeffs[j] * a;
                combo.rhs = up.rhs * b + lo.rhs * a;
                combo.strict = up.strict || lo.strict;
                detail::canonicalize(combo);
                bool all_zero = std::all_of(combo.coeffs.begin(), combo.coeffs.end(),
                                            [](const Rational& x) { return x.is_zero(); });
                if (all_zero) {
                    note_constant(combo);
                    if (constant_violation) return {};
                } else {
                    rest.push_back(std::move(combo));
                }
            }
        }
        subsume(rest);
        rows = std::move(rest);
    }
    // every surviving row would be constant; violations were caught above

    FeasibilityResult result;
    result.feasible = true;
    result.assignment.assign(n, Rational(0));
    for (std::size_t vi = 0; vi < n; ++vi) {
        std::optional<Rational> lo, hi;
        bool lo_strict = false, hi_strict = false;
        for (const auto& r : layers[vi]) {
            if (r.coeffs[vi].is_zero()) continue;
            Rational acc = r.rhs;
            for (std::size_t j = 0; j < vi; ++j)
                if (!r.coeffs[j].is_zero()) acc -= r.coeffs[j] * result.assignment[j];
            Rational bound = acc / r.coeffs[vi];
            if (r.coeffs[vi] > Rational(0)) {
                if (!hi || bound < *hi) {
                    hi = bound;
                    hi_strict = r.strict;
                } else if (bound == *hi && r.strict) {
                    hi_strict = true;
                }
            } else {
                if (!lo || bound > *lo) {
                    lo = bound;
                    lo_strict = r.strict;
                } else if (bound == *lo && r.strict) {
                    lo_strict = true;
                }
            }
        }
        Rational value(0);
        if (lo && hi) {
            if (!lo_strict && (hi_strict ? *lo < *hi : *lo <= *hi))
                value = *lo;
            else
                value = (*lo + *hi) / Rational(2);
        } else if (lo) {
            value = lo_strict ? *lo + Rational(1) : *lo;
        } else if (hi) {
            value = hi_strict ? *hi - Rational(1) : *hi;
        }
        result.assignment[vi] = std::move(value);
    }
    return result;
}

}  // namespace gozinta
