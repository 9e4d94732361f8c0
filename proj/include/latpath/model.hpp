#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "latpath/exactmath.hpp"

namespace latpath {

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend auto operator<=>(const Point&, const Point&) = default;
};

std::string to_string(Point p);

enum class SlopeKind { Integer, Inverse };
enum class Strictness { Weak, Strict };

/// The line y = kx - r (Integer) or y = x/k - r (Inverse), k >= 1.
struct BoundaryLine {
    SlopeKind slope_kind = SlopeKind::Integer;
    std::int64_t k = 1;
    Rational r;

    /// Throws ValidationError when k < 1.
    static BoundaryLine integer_slope(std::int64_t k, Rational r);
    static BoundaryLine inverse_slope(std::int64_t k, Rational r);

    /// True when the intercept sits on lattice-reachable values: r integral for
    /// Integer slope, kr integral for Inverse slope.
    bool has_integral_intercept() const;

    friend bool operator==(const BoundaryLine&, const BoundaryLine&) = default;
};

std::string to_string(const BoundaryLine& line);

/// One counting problem: paths from (a,b) to (m,n) staying (strictly) above `boundary`.
struct PathQuery {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t m = 0;
    std::int64_t n = 0;
    BoundaryLine boundary;
    Strictness strictness = Strictness::Weak;

    Point start() const { return {a, b}; }
    Point end() const { return {m, n}; }
    std::int64_t length() const { return (m - a) + (n - b); }
};

std::string to_string(const PathQuery& q);

bool above(Point p, const BoundaryLine& line, Strictness strictness);

/// Replaces a non-lattice intercept by the equivalent lattice one: floor(r) for
/// Integer slope, floor(kr)/k for Inverse slope. Idempotent.
BoundaryLine normalize_intercept(const BoundaryLine& line);

enum class QueryClass {
    InDomain,                 ///< within the stated condition block of its formula
    OutsideStatedConditions,  ///< endpoints valid, but a stated condition is relaxed
    Invalid,                  ///< an endpoint violates the boundary, or a > m / b > n / a < 0
};

std::string_view to_string(QueryClass c);

struct QueryValidation {
    QueryClass cls = QueryClass::Invalid;
    std::string reason;
};

QueryValidation validate_query(const PathQuery& q);

class StepSet {
public:
    enum class Kind { Unit, Koroljuk, Bohm };

    static StepSet unit() { return StepSet(Kind::Unit, 1); }
    /// Steps U = (1,1), D = (-p,1).
    static StepSet koroljuk(std::int64_t p);
    /// Steps U = (1,rise), D = (1,-1).
    static StepSet bohm(std::int64_t rise);

    Kind kind() const noexcept { return kind_; }
    std::int64_t param() const noexcept { return param_; }

    /// H for Unit, U for Koroljuk/Bohm.
    Point first() const;
    /// V for Unit, D for Koroljuk/Bohm.
    Point second() const;
    char first_symbol() const { return kind_ == Kind::Unit ? 'H' : 'U'; }
    char second_symbol() const { return kind_ == Kind::Unit ? 'V' : 'D'; }

    bool contains(Point step) const { return step == first() || step == second(); }
    Point step_for(char symbol) const;
    char symbol_for(Point step) const;

    friend bool operator==(const StepSet&, const StepSet&) = default;

private:
    StepSet(Kind kind, std::int64_t param) : kind_(kind), param_(param) {}
    Kind kind_;
    std::int64_t param_;
};

/// A start point plus a sequence of steps drawn from one step set.
class LatticePath {
public:
    /// Throws ValidationError if any step is not in `set`.
    LatticePath(Point start, StepSet set, std::vector<Point> steps);

    /// Decodes the canonical step string (H/V for Unit, U/D otherwise).
    static LatticePath parse(Point start, StepSet set, std::string_view encoded);

    Point start() const noexcept { return start_; }
    const StepSet& step_set() const noexcept { return set_; }
    const std::vector<Point>& steps() const noexcept { return steps_; }
    std::size_t size() const noexcept { return steps_.size(); }
    bool empty() const noexcept { return steps_.empty(); }

    Point end() const;
    /// start followed by every prefix sum of the steps.
    std::vector<Point> points() const;
    std::string encode() const;
    std::int64_t count_of(Point step) const;

    friend bool operator==(const LatticePath&, const LatticePath&) = default;

private:
    Point start_;
    StepSet set_;
    std::vector<Point> steps_;
};

/// True when `path` is a unit path from q.start() to q.end() whose every
/// visited point satisfies the boundary predicate.
bool is_member(const LatticePath& path, const PathQuery& q);

}  // namespace latpath
