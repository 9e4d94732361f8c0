#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace latpath {

using BigInt = mpz_class;

/// Nonnegative arbitrary-precision integer. Every enumeration result is a Count.
class Count {
public:
    Count() = default;
    Count(unsigned long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    /// Throws ValidationError if `v` is negative.
    explicit Count(BigInt v);

    const BigInt& value() const noexcept { return value_; }
    std::string str() const { return value_.get_str(); }

    Count& operator+=(const Count& o) {
        value_ += o.value_;
        return *this;
    }
    friend Count operator+(Count a, const Count& b) { return a += b; }
    friend Count operator*(const Count& a, const Count& b) { return Count(BigInt(a.value_ * b.value_)); }

    friend bool operator==(const Count& a, const Count& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Count& a, const Count& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    BigInt value_{0};
};

std::ostream& operator<<(std::ostream& os, const Count& c);

/// Exact fraction, always kept in canonical form (denominator > 0, lowest terms).
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
    explicit Rational(const BigInt& v) : q_(v) {}
    /// Throws ValidationError on a zero denominator.
    Rational(const BigInt& num, const BigInt& den);

    /// Accepts "p/q" or a plain integer, optional leading sign.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    bool is_integer() const { return q_.get_den() == 1; }
    BigInt floor() const;
    /// Throws ValidationError unless integral.
    BigInt to_integer() const;
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    /// Throws ValidationError on division by zero.
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Floored division, valid for negative numerators. `den` must be positive.
std::int64_t floor_div(std::int64_t num, std::int64_t den);

/// C(n, k) with the vanishing convention: 0 when k < 0 or k > n.
/// Throws ValidationError when n < 0.
Count binomial(std::int64_t n, std::int64_t k);

/// x(x-1)...(x-k+1)/k! for rational x; 1 when k = 0. Throws ValidationError when k < 0.
Rational generalized_binomial(const Rational& x, std::int64_t k);

/// (C(x,k), (-1)^k C(k-x-1,k)). Both components are equal.
std::pair<Rational, Rational> upper_negation(const Rational& x, std::int64_t k);

}  // namespace latpath
