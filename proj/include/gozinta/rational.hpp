// Copyright (c) gozinta contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gozinta/errors.hpp"

namespace gozinta {

/// Arbitrary-precision signed integer. Little-endian 32-bit limbs, no
/// leading zero limbs, sign in {-1, 0, +1} with zero represented as
/// sign 0 and an empty limb vector.
class BigInt {
public:
    BigInt() = default;

    BigInt(std::int64_t v) {  // NOLINT: implicit by design
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // avoid overflow on INT64_MIN
        std::uint64_t m = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
        mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
        if (m >> 32) mag_.push_back(static_cast<std::uint32_t>(m >> 32));
    }

    static BigInt from_string(std::string_view s) {
        BigInt out;
        bool neg = false;
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i >= s.size()) throw Error(Errc::ParseError, "empty integer literal");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw Error(Errc::ParseError, "bad digit in integer literal");
            out.mul_small_add(10, static_cast<std::uint32_t>(s[i] - '0'));
        }
        if (!out.mag_.empty()) out.sign_ = neg ? -1 : 1;
        return out;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt{};
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt{};
        BigInt r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                                    r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            std::size_t k = i + b.mag_.size();
            while (carry) {
                std::uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        if (r.mag_.empty()) r.sign_ = 0;
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    /// Truncated quotient and remainder: a = q*b + r with |r| < |b| and
    /// r carrying the sign of a (C-style).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw Error(Errc::MalformedSystem, "division by zero");
        if (cmp_mag(a.mag_, b.mag_) < 0) {
            q = BigInt{};
            r = a;
            return;
        }
        // binary long division on magnitudes
        std::vector<std::uint32_t> quo(a.mag_.size(), 0);
        std::vector<std::uint32_t> rem;
        for (std::size_t bit = a.mag_.size() * 32; bit-- > 0;) {
            shl1(rem);
            if ((a.mag_[bit / 32] >> (bit % 32)) & 1u) {
                if (rem.empty()) rem.push_back(1);
                else {
                    // set low bit (rem is even after shl1)
                    rem[0] |= 1u;
                }
            }
            if (cmp_mag(rem, b.mag_) >= 0) {
                rem = sub_mag(rem, b.mag_);
                quo[bit / 32] |= (1u << (bit % 32));
            }
        }
        q.mag_ = std::move(quo);
        q.trim();
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.mag_ = std::move(rem);
        r.trim();
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.mag_.empty() ? 0 : 1;
        b.sign_ = b.mag_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.mag_, b.mag_) * (a.sign_ == 0 ? 0 : a.sign_);
        return c <=> 0;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::string out;
        std::vector<std::uint32_t> m = mag_;
        while (!m.empty()) {
            // divide magnitude by 10^9, collect remainder
            std::uint64_t rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            std::string chunk = std::to_string(rem);
            if (!m.empty()) chunk.insert(0, 9 - chunk.size(), '0');
            out.insert(0, chunk);
        }
        if (sign_ < 0) out.insert(0, 1, '-');
        return out;
    }

    /// Fits in int64? (used by tests and small fast paths)
    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        std::uint64_t m = 0;
        if (mag_.size() >= 1) m = mag_[0];
        if (mag_.size() == 2) m |= static_cast<std::uint64_t>(mag_[1]) << 32;
        if (sign_ >= 0) return m <= static_cast<std::uint64_t>(INT64_MAX);
        return m <= static_cast<std::uint64_t>(INT64_MAX) + 1;
    }
    std::int64_t to_int64() const {
        std::uint64_t m = 0;
        if (mag_.size() >= 1) m = mag_[0];
        if (mag_.size() == 2) m |= static_cast<std::uint64_t>(mag_[1]) << 32;
        return sign_ < 0 ? -static_cast<std::int64_t>(m) : static_cast<std::int64_t>(m);
    }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    void mul_small_add(std::uint32_t mul, std::uint32_t add) {
        std::uint64_t carry = add;
        for (auto& limb : mag_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * mul + carry;
            limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
    }

    static void shl1(std::vector<std::uint32_t>& m) {
        std::uint32_t carry = 0;
        for (auto& limb : m) {
            std::uint32_t next = limb >> 31;
            limb = (limb << 1) | carry;
            carry = next;
        }
        if (carry) m.push_back(carry);
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r = big;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + carry +
                                (i < small.size() ? small[i] : 0u);
            r[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            if (!carry && i >= small.size()) break;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += (static_cast<std::int64_t>(1) << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
            if (!borrow && i >= b.size()) break;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den > 0,
/// zero is 0/1. This is the only scalar type used for side lengths,
/// expansion amounts and solver arithmetic; there is no floating point
/// anywhere in the library.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

    /// Accepts "p/q", plain integers, and exact decimals such as "3.5".
    static Rational from_string(std::string_view s) {
        if (s.empty()) throw Error(Errc::ParseError, "empty number literal");
        auto slash = s.find('/');
        if (slash != std::string_view::npos) {
            return Rational(BigInt::from_string(s.substr(0, slash)),
                            BigInt::from_string(s.substr(slash + 1)));
        }
        auto dot = s.find('.');
        if (dot == std::string_view::npos)
            return Rational(BigInt::from_string(s), BigInt(1));
        std::string digits(s.substr(0, dot));
        std::string_view frac = s.substr(dot + 1);
        if (frac.empty() || digits == "-" || digits == "+" || digits.empty())
            throw Error(Errc::ParseError, "bad decimal literal");
        BigInt den(1);
        for (char c : frac) {
            if (c < '0' || c > '9') throw Error(Errc::ParseError, "bad decimal literal");
            digits.push_back(c);
            den *= BigInt(10);
        }
        return Rational(BigInt::from_string(digits), std::move(den));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_.is_negative(); }
    bool is_integer() const { return den_ == BigInt(1); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw Error(Errc::MalformedSystem, "division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return (a.num_ * b.den_) <=> (b.num_ * a.den_);
    }

    /// Largest integer <= value.
    BigInt floor() const {
        BigInt q, r;
        BigInt::divmod(num_, den_, q, r);
        if (r.is_negative()) q -= BigInt(1);
        return q;
    }
    BigInt ceil() const {
        BigInt q, r;
        BigInt::divmod(num_, den_, q, r);
        if (!r.is_zero() && !r.is_negative()) q += BigInt(1);
        return q;
    }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_;
    BigInt den_;

    void normalize() {
        if (den_.is_zero()) throw Error(Errc::MalformedSystem, "zero denominator");
        if (den_.is_negative()) {
            den_ = -den_;
            num_ = -num_;
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        BigInt g = BigInt::gcd(num_.abs(), den_);
        if (g != BigInt(1)) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

inline Rational rat(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

}  // namespace gozinta
