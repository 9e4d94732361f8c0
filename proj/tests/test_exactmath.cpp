#include <doctest.h>

#include <vector>

#include "latpath/errors.hpp"
#include "latpath/exactmath.hpp"

using latpath::binomial;
using latpath::Count;
using latpath::generalized_binomial;
using latpath::Rational;
using latpath::upper_negation;

TEST_CASE("binomial small values") {
    CHECK(binomial(4, 2) == Count(6));
    CHECK(binomial(5, 0) == Count(1));
    CHECK(binomial(3, 5) == Count(0));
    CHECK(binomial(3, -1) == Count(0));
    CHECK(binomial(0, 0) == Count(1));
}

TEST_CASE("binomial rejects a negative upper index") {
    CHECK_THROWS_AS(binomial(-1, 0), latpath::ValidationError);
    CHECK_THROWS_AS(binomial(-3, 2), latpath::ValidationError);
}

TEST_CASE("binomial satisfies Pascal's rule up to 64") {
    for (std::int64_t n = 1; n <= 64; ++n) {
        for (std::int64_t k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}

TEST_CASE("binomial is exact beyond 64 bits") {
    CHECK(binomial(100, 50).str() == "100891344545564193334812497256");
    CHECK(binomial(200, 100).str().size() == 59);
}

TEST_CASE("generalized binomial") {
    CHECK(generalized_binomial(Rational(-1), 2) == Rational(1));
    CHECK(generalized_binomial(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(generalized_binomial(Rational(6), 2) == Rational(15));
    CHECK(generalized_binomial(Rational(7, 3), 0) == Rational(1));
    CHECK_THROWS_AS(generalized_binomial(Rational(2), -1), latpath::ValidationError);
}

TEST_CASE("generalized binomial matches binomial on nonnegative integers") {
    for (std::int64_t n = 0; n <= 20; ++n) {
        for (std::int64_t k = 0; k <= 22; ++k) {
            CHECK(generalized_binomial(Rational(n), k) == Rational(binomial(n, k).value()));
        }
    }
}

TEST_CASE("upper negation examples") {
    auto [l1, r1] = upper_negation(Rational(-2), 1);
    CHECK(l1 == Rational(-2));
    CHECK(r1 == Rational(-2));
    auto [l2, r2] = upper_negation(Rational(5), 2);
    CHECK(l2 == Rational(10));
    CHECK(r2 == Rational(10));
    auto [l3, r3] = upper_negation(Rational(1, 2), 1);
    CHECK(l3 == Rational(1, 2));
    CHECK(r3 == Rational(1, 2));
    CHECK_THROWS_AS(upper_negation(Rational(1), -1), latpath::ValidationError);
}

TEST_CASE("upper negation holds on a rational grid") {
    for (long num = -9; num <= 9; ++num) {
        for (long den = 1; den <= 5; ++den) {
            const Rational x(num, den);
            for (std::int64_t k = 0; k <= 10; ++k) {
                auto [lhs, rhs] = upper_negation(x, k);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("rationals stay canonical") {
    const Rational a(4, 6);
    CHECK(a.numerator() == 2);
    CHECK(a.denominator() == 3);
    const Rational b(3, -6);
    CHECK(b.numerator() == -1);
    CHECK(b.denominator() == 2);
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(0, 5).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), latpath::ValidationError);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-4/6") == Rational(-2, 3));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-2") == Rational(-2));
    CHECK(Rational::parse("+5/10").str() == "1/2");
    for (const char* bad : {"", "/", "1/", "/2", "1/0", "a", "1.5", "1/2/3", "--1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::parse(bad), latpath::ValidationError);
    }
}

TEST_CASE("rational floor, integrality and arithmetic") {
    CHECK(Rational(-3, 2).floor() == -2);
    CHECK(Rational(3, 2).floor() == 1);
    CHECK(Rational(-4).floor() == -4);
    CHECK(Rational(6, 3).is_integer());
    CHECK_FALSE(Rational(5, 3).is_integer());
    CHECK(Rational(6, 3).to_integer() == 2);
    CHECK_THROWS_AS(Rational(5, 3).to_integer(), latpath::ValidationError);
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), latpath::ValidationError);
    CHECK(Rational(-1, 3) < Rational(0));
    CHECK(Rational(7, 2).str() == "7/2");
    CHECK(Rational(-7).str() == "-7");
}

TEST_CASE("floored division") {
    CHECK(latpath::floor_div(7, 2) == 3);
    CHECK(latpath::floor_div(-7, 2) == -4);
    CHECK(latpath::floor_div(-6, 3) == -2);
    CHECK(latpath::floor_div(0, 5) == 0);
}

TEST_CASE("counts are nonnegative") {
    CHECK_THROWS_AS(Count(latpath::BigInt(-1)), latpath::ValidationError);
    CHECK(Count(3) + Count(4) == Count(7));
    CHECK(Count(3) * Count(4) == Count(12));
    CHECK(Count(2) < Count(5));
}
