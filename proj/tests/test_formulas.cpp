#include <doctest.h>

#include "latpath/errors.hpp"
#include "latpath/formulas.hpp"
#include "latpath/oracle.hpp"

using namespace latpath;

namespace {

Count dp(std::int64_t k, Rational r, SlopeKind kind, Strictness s, std::int64_t a, std::int64_t b,
         std::int64_t m, std::int64_t n) {
    const auto line = kind == SlopeKind::Integer ? BoundaryLine::integer_slope(k, r)
                                                 : BoundaryLine::inverse_slope(k, r);
    return oracle::dp_count(PathQuery{a, b, m, n, line, s});
}

Count dp_weak(std::int64_t k, std::int64_t r, std::int64_t a, std::int64_t b, std::int64_t m,
              std::int64_t n) {
    return dp(k, r, SlopeKind::Integer, Strictness::Weak, a, b, m, n);
}

}  // namespace

TEST_CASE("count_weak") {
    CHECK(count_weak(1, 0, 0, 0, 2, 2) == Count(2));
    CHECK(count_weak(1, 0, 0, 2, 2, 2) == Count(1));
    CHECK(count_weak(2, 3, 4, 9, 4, 9) == Count(1));
    CHECK(count_weak(1, 0, 0, 2, 2, 2) == dp_weak(1, 0, 0, 2, 2, 2));
}

TEST_CASE("count_strict") {
    CHECK(count_strict(1, 1, 0, 0, 1, 2) == Count(2));
    CHECK(count_strict(1, 1, 0, 0, 2, 3) == Count(5));
    CHECK(count_strict(2, 0, 1, 3, 1, 3) == Count(1));
    CHECK(count_strict(1, 1, 0, 0, 2, 3) == dp(1, 1, SlopeKind::Integer, Strictness::Strict, 0, 0, 2, 3));
}

TEST_CASE("count_weak_inv") {
    CHECK(count_weak_inv(2, 0, 0, 0, 2, 1) == Count(1));
    CHECK(count_weak_inv(2, 1, 0, 0, 2, 1) == Count(3));
    CHECK(count_weak_inv(3, Rational(1, 3), 2, 1, 2, 1) == Count(1));
}

TEST_CASE("count_strict_inv") {
    CHECK(count_strict_inv(2, 1, 0, 1, 2, 2) == Count(3));
    CHECK(count_strict_inv(1, 0, 0, 1, 2, 3) == Count(2));
    CHECK(count_strict_inv(2, 0, 2, 2, 2, 2) == Count(1));
    CHECK(count_strict_inv(1, 0, 0, 1, 2, 3) == dp(1, 0, SlopeKind::Inverse, Strictness::Strict, 0, 1, 2, 3));
}

TEST_CASE("closed forms reject out-of-domain arguments") {
    CHECK_THROWS_AS(count_weak(0, 0, 0, 0, 1, 1), ValidationError);
    CHECK_THROWS_AS(count_weak(1, 0, 2, 0, 1, 1), ValidationError);
    CHECK_THROWS_AS(count_weak(2, 0, 1, 0, 2, 4), ValidationError);
    CHECK_THROWS_AS(count_weak(1, 0, 0, 0, 3, 2), ValidationError);
    CHECK_THROWS_AS(count_strict(1, 0, 0, 0, 1, 2), ValidationError);
    CHECK_THROWS_AS(count_weak_inv(2, Rational(1, 3), 0, 0, 2, 1), ValidationError);
    CHECK_THROWS_AS(count_strict_inv(1, 0, 0, 0, 1, 1), ValidationError);
}

TEST_CASE("base_case") {
    CHECK(base_case(2, 1, 2, 3, 6) == Count(3));
    CHECK(base_case(1, 0, 1, 2, 2) == Count(2));
    CHECK(base_case(2, 3, 7, 3, 7) == Count(1));
    CHECK(base_case(2, 1, 2, 3, 6) == dp_weak(2, 0, 1, 2, 3, 6));
    CHECK_THROWS_AS(base_case(1, 0, 2, 2, 2), ValidationError);
    CHECK_THROWS_AS(base_case(1, 0, 0, 0, 0), ValidationError);
}

TEST_CASE("base case agrees with the general weak count") {
    for (std::int64_t k = 1; k <= 4; ++k) {
        for (std::int64_t m = 1; m <= 6; ++m) {
            for (std::int64_t a = 0; a <= m; ++a) {
                for (std::int64_t b = k * a; b <= k * a + k; ++b) {
                    for (std::int64_t n = std::max(b, k * m); n <= k * m + 6; ++n) {
                        CHECK(count_weak(k, 0, a, b, m, n) == base_case(k, a, b, m, n));
                    }
                }
            }
        }
    }
}

TEST_CASE("ballot") {
    CHECK(ballot(2, 2, 4) == Count(3));
    CHECK(ballot(1, 0, 0) == Count(1));
    CHECK(ballot(1, 3, 3) == Count(5));
    CHECK(ballot(2, 2, 4) == dp_weak(2, 0, 0, 0, 2, 4));
    CHECK_THROWS_AS(ballot(2, 2, 3), ValidationError);
    for (std::int64_t k = 1; k <= 4; ++k) {
        for (std::int64_t m = 0; m <= 6; ++m) {
            for (std::int64_t n = k * m; n <= k * m + 8; ++n) {
                CHECK(count_weak(k, 0, 0, 0, m, n) == ballot(k, m, n));
            }
        }
    }
}

TEST_CASE("fuss_catalan") {
    CHECK(fuss_catalan(2, 3) == Count(5));
    CHECK(fuss_catalan(3, 2) == Count(3));
    CHECK(fuss_catalan(2, 0) == Count(1));
    CHECK_THROWS_AS(fuss_catalan(1, 3), ValidationError);
    for (std::int64_t k = 2; k <= 5; ++k) {
        for (std::int64_t m = 0; m <= 6; ++m) {
            CHECK(fuss_catalan(k, m) == dp_weak(k - 1, 0, 0, 0, m, (k - 1) * m));
        }
    }
}

TEST_CASE("Catalan numbers stay exact at large size") {
    const std::int64_t m = 120;
    const BigInt expected = binomial(2 * m, m).value() / (m + 1);
    CHECK(count_weak(1, 0, 0, 0, m, m).value() == expected);
    CHECK(fuss_catalan(2, m).value() == expected);
}

TEST_CASE("koroljuk_literal") {
    CHECK(koroljuk_literal({1, 2, 2, 1}) == Count(1));
    CHECK(koroljuk_literal({1, 1, 2, 1}) == Count(3));
    CHECK(koroljuk_literal({1, 4, 2, 1}) == Count(0));
}

TEST_CASE("koroljuk_reduced") {
    CHECK(koroljuk_reduced({1, 1, 2, 1}) == Count(3));
    CHECK(koroljuk_reduced({1, 2, 2, 1}) == Count(1));
    CHECK(koroljuk_reduced({2, 7, 2, 1}) == Count(0));
}

TEST_CASE("koroljuk forms agree and match brute force") {
    for (std::int64_t p = 1; p <= 8; ++p) {
        for (std::int64_t c = 1; c <= 8; ++c) {
            for (std::int64_t m = 1; m <= 8; ++m) {
                for (std::int64_t n = 1; n <= 8; ++n) {
                    const KoroljukQuery q{p, c, m, n};
                    const auto reduced = koroljuk_reduced(q);
                    CHECK(koroljuk_literal(q) == reduced);
                    if (m + n <= 10 && p <= 3) {
                        CHECK(reduced == oracle::count_stepset(oracle::KoroljukFamily{p, c, m, n}).intersecting);
                    }
                }
            }
        }
    }
}

TEST_CASE("niederhausen") {
    CHECK(niederhausen({1, Rational(1), 2, 2}) == Count(2));
    CHECK(niederhausen({2, Rational(1), 1, 2}) == Count(2));
    CHECK(niederhausen({1, Rational(1), 0, 3}) == Count(1));
    CHECK(niederhausen({2, Rational(3, 2), 2, 3}) ==
          dp(2, 3, SlopeKind::Integer, Strictness::Strict, 0, 0, 2, 3));
}

TEST_CASE("niederhausen validation") {
    CHECK(validate_niederhausen({1, Rational(1), 2, 2}).cls == QueryClass::InDomain);
    CHECK(validate_niederhausen({2, Rational(1, 3), 1, 2}).cls == QueryClass::Invalid);
    CHECK(validate_niederhausen({1, Rational(1), 2, 1}).cls == QueryClass::Invalid);
    CHECK(validate_niederhausen({3, Rational(1, 3), 2, 6}).cls == QueryClass::OutsideStatedConditions);
    CHECK_THROWS_AS(niederhausen({2, Rational(1, 3), 1, 2}), ValidationError);
}

TEST_CASE("niederhausen equals the strict count on its domain") {
    for (std::int64_t k = 1; k <= 3; ++k) {
        for (std::int64_t m = 0; m <= 6; ++m) {
            for (std::int64_t n = 0; n <= 6; ++n) {
                for (std::int64_t kd = 1; kd <= (k + 1) * (m + 1); ++kd) {
                    const NiederhausenQuery q{k, Rational(BigInt(kd), BigInt(k)), m, n};
                    if (validate_niederhausen(q).cls != QueryClass::InDomain) {
                        continue;
                    }
                    CHECK(niederhausen(q) == count_strict(k, kd, 0, 0, m, n));
                }
            }
        }
    }
}

TEST_CASE("bohm") {
    CHECK(bohm({1, 2, 1, 2}) == Count(5));
    CHECK(bohm({2, 1, 1, 1}) == Count(1));
    CHECK(bohm({1, 4, 3, 0}) == Count(1));
    CHECK(bohm({1, 2, 1, 2}) == oracle::count_stepset(oracle::BohmFamily{1, 2, 1, 2}));
    CHECK_THROWS_AS(bohm({1, 0, 1, 1}), ValidationError);
    CHECK_THROWS_AS(bohm({1, 1, 5, 1}), ValidationError);
}

TEST_CASE("bohm equals the rotated strict count and brute force") {
    for (std::int64_t rise = 1; rise <= 3; ++rise) {
        for (std::int64_t s = 1; s <= 4; ++s) {
            for (std::int64_t e = 1; e <= 4; ++e) {
                for (std::int64_t ups = 0; ups <= 5; ++ups) {
                    const BohmQuery q{rise, s, e, ups};
                    if (q.downs() < 0) {
                        continue;
                    }
                    const auto value = bohm(q);
                    CHECK(value == count_strict(rise, e, 0, 0, ups, q.downs()));
                    CHECK(value == oracle::count_stepset(oracle::BohmFamily{rise, s, e, ups}));
                }
            }
        }
    }
}

TEST_CASE("strict-to-weak shift") {
    for (std::int64_t k = 1; k <= 3; ++k) {
        for (std::int64_t r = -2; r <= 4; ++r) {
            for (std::int64_t m = 0; m <= 5; ++m) {
                for (std::int64_t a = 0; a <= m; ++a) {
                    for (std::int64_t n = 1; n <= 8; ++n) {
                        for (std::int64_t b = 1; b <= n; ++b) {
                            if (b + r <= k * a || n + r <= k * m) {
                                continue;
                            }
                            CHECK(count_strict(k, r, a, b, m, n) == count_weak(k, r, a, b - 1, m, n - 1));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("weak count is decreasing in the start ordinate") {
    for (std::int64_t k = 1; k <= 3; ++k) {
        for (std::int64_t r = 0; r <= 3; ++r) {
            for (std::int64_t m = 0; m <= 5; ++m) {
                for (std::int64_t n = std::max<std::int64_t>(0, k * m - r); n <= k * m + 4; ++n) {
                    for (std::int64_t b = std::max<std::int64_t>(0, -r); b < n; ++b) {
                        CHECK(count_weak(k, r, 0, b + 1, m, n) <= count_weak(k, r, 0, b, m, n));
                    }
                }
            }
        }
    }
}

TEST_CASE("inverse slope reduces to slope k with zero intercept") {
    for (std::int64_t k = 1; k <= 3; ++k) {
        for (std::int64_t kr = -4; kr <= 8; ++kr) {
            const Rational r{BigInt(kr), BigInt(k)};
            for (std::int64_t m = 0; m <= 5; ++m) {
                for (std::int64_t a = 0; a <= m; ++a) {
                    for (std::int64_t n = 0; n <= 5; ++n) {
                        for (std::int64_t b = 0; b <= n; ++b) {
                            if (k * b + kr < a || k * n + kr < m) {
                                continue;
                            }
                            const std::int64_t top = k * n + kr;
                            CHECK(count_weak_inv(k, r, a, b, m, n) ==
                                  count_weak(k, 0, 0, top - m, n - b, top - a));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("count_paths is total") {
    const auto line = BoundaryLine::integer_slope(2, 0);
    CHECK(count_paths(PathQuery{1, 0, 2, 4, line, Strictness::Weak}) == Count(0));
    CHECK(count_paths(PathQuery{0, 0, 2, 4, line, Strictness::Weak}) == Count(3));
    CHECK(count_paths(PathQuery{0, 0, 2, 4, line, Strictness::Strict}) == Count(0));
    CHECK(count_paths(PathQuery{3, 0, 2, 4, line, Strictness::Weak}) == Count(0));
    const auto off = BoundaryLine::integer_slope(1, Rational(1, 2));
    CHECK(count_paths(PathQuery{0, 0, 2, 2, off, Strictness::Strict}) == Count(2));
    CHECK(count_paths(PathQuery{0, 0, 2, 2, off, Strictness::Weak}) == Count(2));
    const auto inv = BoundaryLine::inverse_slope(2, Rational(3, 4));
    CHECK(count_paths(PathQuery{0, 0, 2, 1, inv, Strictness::Strict}) ==
          dp(2, Rational(3, 4), SlopeKind::Inverse, Strictness::Strict, 0, 0, 2, 1));
}
