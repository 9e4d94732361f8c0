#include <doctest.h>

#include "latpath/errors.hpp"
#include "latpath/model.hpp"

using namespace latpath;

namespace {

PathQuery query(BoundaryLine line, std::int64_t a, std::int64_t b, std::int64_t m, std::int64_t n,
                Strictness s) {
    return PathQuery{a, b, m, n, line, s};
}

}  // namespace

TEST_CASE("above: basic cases") {
    CHECK(above({0, 0}, BoundaryLine::integer_slope(1, 1), Strictness::Strict));
    CHECK_FALSE(above({2, 2}, BoundaryLine::integer_slope(1, 0), Strictness::Strict));
    CHECK(above({2, 2}, BoundaryLine::integer_slope(1, 0), Strictness::Weak));
    CHECK(above({2, 1}, BoundaryLine::inverse_slope(2, 0), Strictness::Weak));
    CHECK_FALSE(above({2, 1}, BoundaryLine::inverse_slope(2, 0), Strictness::Strict));
    CHECK(above({3, 1}, BoundaryLine::inverse_slope(2, Rational(1, 2)), Strictness::Weak));
}

TEST_CASE("above is monotone in y and strict implies weak") {
    for (std::int64_t k = 1; k <= 3; ++k) {
        for (long rn = -6; rn <= 6; ++rn) {
            for (long rd : {1L, 2L, 3L}) {
                for (auto line : {BoundaryLine::integer_slope(k, Rational(rn, rd)),
                                  BoundaryLine::inverse_slope(k, Rational(rn, rd))}) {
                    for (std::int64_t x = 0; x <= 5; ++x) {
                        for (std::int64_t y = -6; y <= 12; ++y) {
                            for (auto s : {Strictness::Weak, Strictness::Strict}) {
                                if (above({x, y}, line, s)) {
                                    CHECK(above({x, y + 1}, line, s));
                                }
                            }
                            if (above({x, y}, line, Strictness::Strict)) {
                                CHECK(above({x, y}, line, Strictness::Weak));
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("slope parameter must be positive") {
    CHECK_THROWS_AS(BoundaryLine::integer_slope(0, 0), ValidationError);
    CHECK_THROWS_AS(BoundaryLine::inverse_slope(-1, 0), ValidationError);
}

TEST_CASE("normalize_intercept") {
    CHECK(normalize_intercept(BoundaryLine::integer_slope(2, Rational(3, 2))) ==
          BoundaryLine::integer_slope(2, 1));
    CHECK(normalize_intercept(BoundaryLine::integer_slope(2, 2)) == BoundaryLine::integer_slope(2, 2));
    CHECK(normalize_intercept(BoundaryLine::inverse_slope(3, Rational(1, 2))) ==
          BoundaryLine::inverse_slope(3, Rational(1, 3)));
    CHECK(normalize_intercept(BoundaryLine::integer_slope(1, Rational(-1, 2))) ==
          BoundaryLine::integer_slope(1, -1));
}

TEST_CASE("normalize_intercept is idempotent and preserves lattice membership") {
    for (std::int64_t k = 1; k <= 4; ++k) {
        for (long rn = -12; rn <= 12; ++rn) {
            for (long rd = 1; rd <= 5; ++rd) {
                for (auto line : {BoundaryLine::integer_slope(k, Rational(rn, rd)),
                                  BoundaryLine::inverse_slope(k, Rational(rn, rd))}) {
                    const auto once = normalize_intercept(line);
                    CHECK(normalize_intercept(once) == once);
                    CHECK(once.has_integral_intercept());
                    for (std::int64_t x = 0; x <= 6; ++x) {
                        for (std::int64_t y = -8; y <= 12; ++y) {
                            CHECK(above({x, y}, line, Strictness::Weak) ==
                                  above({x, y}, once, Strictness::Weak));
                            if (!line.has_integral_intercept()) {
                                CHECK(above({x, y}, line, Strictness::Strict) ==
                                      above({x, y}, once, Strictness::Weak));
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("validate_query classification") {
    CHECK(validate_query(query(BoundaryLine::integer_slope(1, 0), 0, 0, 2, 2, Strictness::Weak)).cls ==
          QueryClass::InDomain);
    CHECK(validate_query(query(BoundaryLine::integer_slope(1, 1), 0, 0, 1, 2, Strictness::Strict)).cls ==
          QueryClass::OutsideStatedConditions);
    CHECK(validate_query(query(BoundaryLine::integer_slope(2, 0), 1, 0, 2, 4, Strictness::Weak)).cls ==
          QueryClass::Invalid);
}

TEST_CASE("validate_query rejects malformed rectangles") {
    const auto line = BoundaryLine::integer_slope(1, 5);
    CHECK(validate_query(query(line, -1, 0, 2, 2, Strictness::Weak)).cls == QueryClass::Invalid);
    CHECK(validate_query(query(line, 3, 0, 2, 2, Strictness::Weak)).cls == QueryClass::Invalid);
    CHECK(validate_query(query(line, 0, 3, 2, 2, Strictness::Weak)).cls == QueryClass::Invalid);
    CHECK(validate_query(query(BoundaryLine::integer_slope(1, 0), 0, 0, 3, 2, Strictness::Weak)).cls ==
          QueryClass::Invalid);
    const auto v = validate_query(query(line, 0, -1, 2, 2, Strictness::Weak));
    CHECK(v.cls == QueryClass::OutsideStatedConditions);
    CHECK_FALSE(v.reason.empty());
}

TEST_CASE("off-lattice intercepts classify like their normalized line") {
    const auto line = BoundaryLine::integer_slope(1, Rational(1, 2));
    CHECK(validate_query(query(line, 0, 0, 2, 2, Strictness::Strict)).cls == QueryClass::InDomain);
    CHECK(validate_query(query(line, 0, 0, 2, 1, Strictness::Strict)).cls == QueryClass::Invalid);
}

TEST_CASE("step sets") {
    CHECK(StepSet::unit().first() == Point{1, 0});
    CHECK(StepSet::unit().second() == Point{0, 1});
    CHECK(StepSet::koroljuk(2).first() == Point{1, 1});
    CHECK(StepSet::koroljuk(2).second() == Point{-2, 1});
    CHECK(StepSet::bohm(3).first() == Point{1, 3});
    CHECK(StepSet::bohm(3).second() == Point{1, -1});
    CHECK_FALSE(StepSet::unit().contains({1, 1}));
    CHECK(StepSet::bohm(1).symbol_for({1, -1}) == 'D');
    CHECK_THROWS_AS(StepSet::unit().step_for('U'), ValidationError);
    CHECK_THROWS_AS(StepSet::koroljuk(0), ValidationError);
    CHECK_THROWS_AS(StepSet::bohm(0), ValidationError);
}

TEST_CASE("lattice paths") {
    const auto path = LatticePath::parse({1, 2}, StepSet::unit(), "HVV");
    CHECK(path.size() == 3);
    CHECK(path.end() == Point{2, 4});
    const std::vector<Point> expected{{1, 2}, {2, 2}, {2, 3}, {2, 4}};
    CHECK(path.points() == expected);
    CHECK(path.encode() == "HVV");
    CHECK(path.count_of({0, 1}) == 2);
    CHECK_THROWS_AS(LatticePath({0, 0}, StepSet::unit(), {{1, 1}}), ValidationError);
    CHECK_THROWS_AS(LatticePath::parse({0, 0}, StepSet::unit(), "HXV"), ValidationError);

    const auto empty = LatticePath::parse({3, 3}, StepSet::unit(), "");
    CHECK(empty.empty());
    CHECK(empty.end() == Point{3, 3});
    CHECK(empty.points().size() == 1);
}

TEST_CASE("parse and encode round trip") {
    for (const char* s : {"", "U", "D", "UUD", "DUDUDD", "UUUUUUUU"}) {
        for (std::int64_t p = 1; p <= 3; ++p) {
            const auto path = LatticePath::parse({0, 0}, StepSet::koroljuk(p), s);
            CHECK(path.encode() == s);
            CHECK(LatticePath(path.start(), path.step_set(), path.steps()) == path);
        }
    }
}

TEST_CASE("membership") {
    const auto q = query(BoundaryLine::integer_slope(1, 1), 0, 0, 1, 2, Strictness::Strict);
    CHECK(is_member(LatticePath::parse({0, 0}, StepSet::unit(), "VHV"), q));
    CHECK(is_member(LatticePath::parse({0, 0}, StepSet::unit(), "VVH"), q));
    CHECK_FALSE(is_member(LatticePath::parse({0, 0}, StepSet::unit(), "HVV"), q));
    CHECK_FALSE(is_member(LatticePath::parse({0, 0}, StepSet::unit(), "VV"), q));
    CHECK_FALSE(is_member(LatticePath::parse({0, 1}, StepSet::unit(), "HV"), q));
    CHECK_FALSE(is_member(LatticePath::parse({0, 0}, StepSet::koroljuk(1), "UDU"), q));
}
