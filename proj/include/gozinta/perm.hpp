// Copyright (c) gozinta contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "gozinta/errors.hpp"

namespace gozinta {

/// Permutation in one-line notation: entry i (0-based) holds the 1-based
/// value at position i+1. Positions read innermost to outermost when a
/// permutation names a box order.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<std::size_t> one_line) : p_(std::move(one_line)) {
        std::vector<bool> seen(p_.size(), false);
        for (auto v : p_) {
            if (v < 1 || v > p_.size() || seen[v - 1])
                throw Error(Errc::ParseError, "not a permutation in one-line notation");
            seen[v - 1] = true;
        }
    }

    static Permutation identity(std::size_t k) {
        std::vector<std::size_t> v(k);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    static Permutation reverse(std::size_t k) {
        std::vector<std::size_t> v(k);
        for (std::size_t i = 0; i < k; ++i) v[i] = k - i;
        return Permutation(std::move(v));
    }

    /// Parses "2413" (single digits) or "2,4,1,3".
    static Permutation parse(const std::string& text) {
        std::vector<std::size_t> v;
        if (text.find(',') != std::string::npos) {
            std::size_t pos = 0;
            while (pos < text.size()) {
                std::size_t next = text.find(',', pos);
                if (next == std::string::npos) next = text.size();
                std::string tok = text.substr(pos, next - pos);
                if (tok.empty()) throw Error(Errc::ParseError, "empty permutation entry");
                for (char c : tok)
                    if (c < '0' || c > '9')
                        throw Error(Errc::ParseError, "bad permutation entry: " + tok);
                v.push_back(std::stoul(tok));
                pos = next + 1;
            }
        } else {
            for (char c : text) {
                if (c < '1' || c > '9')
                    throw Error(Errc::ParseError, std::string("bad permutation digit: ") + c);
                v.push_back(static_cast<std::size_t>(c - '0'));
            }
        }
        return Permutation(std::move(v));
    }

    std::size_t size() const { return p_.size(); }
    /// Value at 1-based position i.
    std::size_t at(std::size_t i) const { return p_.at(i - 1); }
    const std::vector<std::size_t>& one_line() const { return p_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < p_.size(); ++i)
            if (p_[i] != i + 1) return false;
        return true;
    }

    std::string to_string() const {
        bool digits = p_.size() <= 9;
        std::string out;
        for (std::size_t i = 0; i < p_.size(); ++i) {
            if (!digits && i) out.push_back(',');
            out += std::to_string(p_[i]);
        }
        return out;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

private:
    std::vector<std::size_t> p_;
};

/// Number of pairs i < j with p_i > p_j.
inline std::size_t inversions(const Permutation& p) {
    std::size_t count = 0;
    const auto& v = p.one_line();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) ++count;
    return count;
}

/// q with q[p_i] = i, so p composed with q is the identity.
inline Permutation inverse_perm(const Permutation& p) {
    std::vector<std::size_t> q(p.size());
    for (std::size_t i = 1; i <= p.size(); ++i) q[p.at(i) - 1] = i;
    return Permutation(std::move(q));
}

/// All permutations of {1..k} in lexicographic order.
inline std::vector<Permutation> all_permutations(std::size_t k) {
    std::vector<std::size_t> v(k);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace gozinta
