// Copyright (c) gozinta contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gozinta/errors.hpp"
#include "gozinta/rational.hpp"

namespace gozinta {

/// Exact positive rational side length.
using Scalar = Rational;

/// A box's side lengths sorted non-decreasingly. At least two sides,
/// all strictly positive.
class Dims {
public:
    Dims() = default;

    const std::vector<Scalar>& sides() const { return sides_; }
    std::size_t size() const { return sides_.size(); }

    /// 1-based access, matching the usual subscript convention.
    const Scalar& at(std::size_t i) const { return sides_.at(i - 1); }
    const Scalar& operator[](std::size_t i) const { return sides_[i - 1]; }

    friend bool operator==(const Dims& a, const Dims& b) = default;

    friend Dims make_dims(std::vector<Scalar> values);

private:
    explicit Dims(std::vector<Scalar> sides) : sides_(std::move(sides)) {}
    std::vector<Scalar> sides_;
};

/// Sorts the given side lengths non-decreasingly and validates them.
inline Dims make_dims(std::vector<Scalar> values) {
    if (values.size() < 2)
        throw Error(Errc::TooFewSides, "a box needs at least 2 sides, got " +
                                           std::to_string(values.size()));
    for (const auto& v : values)
        if (!(v > Scalar(0)))
            throw Error(Errc::NonPositiveSide, "side " + v.to_string() + " is not positive");
    std::sort(values.begin(), values.end());
    return Dims(std::move(values));
}

inline Dims make_dims(std::initializer_list<std::int64_t> values) {
    std::vector<Scalar> v;
    v.reserve(values.size());
    for (auto x : values) v.emplace_back(x);
    return make_dims(std::move(v));
}

/// Componentwise >= between equal-length dimension vectors.
inline bool dominates(const Dims& a, const Dims& b) {
    if (a.size() != b.size())
        throw Error(Errc::DimensionMismatch, "cannot compare " + std::to_string(a.size()) +
                                                 "D and " + std::to_string(b.size()) + "D dims");
    for (std::size_t i = 1; i <= a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

/// Componentwise >. Equivalent to "a closed box of dims a can hold a
/// closed box of dims b" under the zero-thickness idealization.
inline bool strictly_dominates(const Dims& a, const Dims& b) {
    if (a.size() != b.size())
        throw Error(Errc::DimensionMismatch, "cannot compare " + std::to_string(a.size()) +
                                                 "D and " + std::to_string(b.size()) + "D dims");
    for (std::size_t i = 1; i <= a.size(); ++i)
        if (!(a[i] > b[i])) return false;
    return true;
}

/// A box design: sorted dimensions plus the (optional) single side that
/// can expand. A box never expands more than one side.
struct BoxDesign {
    std::string label;
    Dims dims;
    std::optional<std::size_t> expand_side;  // 1-based index into dims

    friend bool operator==(const BoxDesign& a, const BoxDesign& b) = default;
};

/// How a box appears in one arrangement: closed, or expanded to a
/// stated amount on its design's expandable side.
struct Presentation {
    std::optional<Scalar> amount;  // nullopt = closed

    bool closed() const { return !amount.has_value(); }
    static Presentation make_closed() { return {}; }
    static Presentation expanded(Scalar v) { return {std::move(v)}; }

    friend bool operator==(const Presentation& a, const Presentation& b) = default;
};

/// True iff the amount is a legal bounded expansion: strictly larger
/// than the side, at most twice it.
inline bool expansion_bound_ok(const BoxDesign& box, const Scalar& amount) {
    if (!box.expand_side)
        throw Error(Errc::NoExpandSide, "box " + box.label + " has no expandable side");
    const Scalar& side = box.dims[*box.expand_side];
    return side < amount && amount <= Scalar(2) * side;
}

/// Sorted dims of a presented box. An expanded value is inserted after
/// any equal closed sides, so presentations with ties have a stable
/// sorted position. With enforce_bound, amounts above twice the side
/// are rejected.
inline Dims presented_dims(const BoxDesign& box, const Presentation& p,
                           bool enforce_bound = true) {
    if (p.closed()) return box.dims;
    if (!box.expand_side)
        throw Error(Errc::NoExpandSide, "box " + box.label + " has no expandable side");
    const std::size_t j = *box.expand_side;
    const Scalar& orig = box.dims[j];
    if (!(*p.amount > orig))
        throw Error(Errc::AmountNotLarger, "box " + box.label + " amount " +
                                               p.amount->to_string() +
                                               " does not exceed side " + orig.to_string());
    if (enforce_bound && *p.amount > Scalar(2) * orig)
        throw Error(Errc::BoundExceeded, "box " + box.label + " amount " +
                                             p.amount->to_string() + " exceeds twice side " +
                                             orig.to_string());
    std::vector<Scalar> rest;
    rest.reserve(box.dims.size());
    for (std::size_t i = 1; i <= box.dims.size(); ++i)
        if (i != j) rest.push_back(box.dims[i]);
    auto pos = std::upper_bound(rest.begin(), rest.end(), *p.amount);
    rest.insert(pos, *p.amount);
    return make_dims(std::move(rest));
}

/// Sorted position (1-based) the expanded value occupies in the
/// presented dims; used by diagram rendering.
inline std::size_t presented_rank(const BoxDesign& box, const Scalar& amount) {
    if (!box.expand_side)
        throw Error(Errc::NoExpandSide, "box " + box.label + " has no expandable side");
    const std::size_t j = *box.expand_side;
    std::size_t rank = 1;
    for (std::size_t i = 1; i <= box.dims.size(); ++i)
        if (i != j && box.dims[i] <= amount) ++rank;
    return rank;
}

}  // namespace gozinta
