#include "latpath/exactmath.hpp"

#include <ostream>

#include "latpath/errors.hpp"

namespace latpath {

Count::Count(BigInt v) : value_(std::move(v)) {
    if (sgn(value_) < 0) {
        throw ValidationError("Count must be nonnegative, got " + value_.get_str());
    }
}

std::ostream& operator<<(std::ostream& os, const Count& c) { return os << c.str(); }

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw ValidationError("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

namespace {

bool parse_integer(std::string_view s, BigInt& out) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (digits.empty()) {
        return false;
    }
    for (const char c : digits) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    std::string buf(s);
    if (buf.front() == '+') {
        buf.erase(0, 1);
    }
    return out.set_str(buf, 10) == 0;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    BigInt num;
    BigInt den{1};
    const bool ok = slash == std::string_view::npos
                        ? parse_integer(text, num)
                        : parse_integer(text.substr(0, slash), num) &&
                              parse_integer(text.substr(slash + 1), den);
    if (!ok) {
        throw ValidationError("malformed rational '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

BigInt Rational::floor() const {
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
}

BigInt Rational::to_integer() const {
    if (!is_integer()) {
        throw ValidationError("expected an integer, got " + str());
    }
    return q_.get_num();
}

std::string Rational::str() const {
    return is_integer() ? q_.get_num().get_str() : q_.get_str();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (sgn(b.q_) == 0) {
        throw ValidationError("division by zero");
    }
    return Rational(mpq_class(a.q_ / b.q_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
    std::int64_t q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) {
        --q;
    }
    return q;
}

Count binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) {
        throw ValidationError("binomial: negative upper index " + std::to_string(n) +
                              " (use generalized_binomial)");
    }
    if (k < 0 || k > n) {
        return Count{};
    }
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Count(std::move(out));
}

Rational generalized_binomial(const Rational& x, std::int64_t k) {
    if (k < 0) {
        throw ValidationError("generalized_binomial: negative lower index " + std::to_string(k));
    }
    Rational num{1};
    BigInt fact{1};
    for (std::int64_t j = 0; j < k; ++j) {
        num *= x - Rational(j);
        fact *= j + 1;
    }
    return num / Rational(fact);
}

std::pair<Rational, Rational> upper_negation(const Rational& x, std::int64_t k) {
    if (k < 0) {
        throw ValidationError("upper_negation: negative lower index " + std::to_string(k));
    }
    const Rational direct = generalized_binomial(x, k);
    Rational negated = generalized_binomial(Rational(k) - x - Rational(1), k);
    if (k % 2 != 0) {
        negated = -negated;
    }
    return {direct, negated};
}

}  // namespace latpath
