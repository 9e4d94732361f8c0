#include "latpath/model.hpp"

#include <algorithm>
#include <sstream>

#include "latpath/errors.hpp"

namespace latpath {

std::string to_string(Point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

BoundaryLine BoundaryLine::integer_slope(std::int64_t k, Rational r) {
    if (k < 1) {
        throw ValidationError("slope parameter k must be >= 1, got " + std::to_string(k));
    }
    return {SlopeKind::Integer, k, std::move(r)};
}

BoundaryLine BoundaryLine::inverse_slope(std::int64_t k, Rational r) {
    if (k < 1) {
        throw ValidationError("slope parameter k must be >= 1, got " + std::to_string(k));
    }
    return {SlopeKind::Inverse, k, std::move(r)};
}

bool BoundaryLine::has_integral_intercept() const {
    return slope_kind == SlopeKind::Integer ? r.is_integer() : (Rational(k) * r).is_integer();
}

std::string to_string(const BoundaryLine& line) {
    std::ostringstream os;
    os << "y = ";
    if (line.slope_kind == SlopeKind::Integer) {
        os << line.k << "x";
    } else {
        os << "x/" << line.k;
    }
    os << " - (" << line.r << ")";
    return os.str();
}

std::string to_string(const PathQuery& q) {
    std::ostringstream os;
    os << (q.strictness == Strictness::Strict ? "strict" : "weak") << " "
       << to_string(q.start()) << " -> " << to_string(q.end()) << " above "
       << to_string(q.boundary);
    return os.str();
}

bool above(Point p, const BoundaryLine& line, Strictness strictness) {
    // Integer: y + r vs kx.  Inverse: ky + kr vs x.
    const Rational x(p.x);
    const Rational y(p.y);
    const Rational k(line.k);
    const Rational lhs = line.slope_kind == SlopeKind::Integer ? y + line.r : k * y + k * line.r;
    const Rational rhs = line.slope_kind == SlopeKind::Integer ? k * x : x;
    return strictness == Strictness::Weak ? lhs >= rhs : lhs > rhs;
}

BoundaryLine normalize_intercept(const BoundaryLine& line) {
    if (line.has_integral_intercept()) {
        return line;
    }
    if (line.slope_kind == SlopeKind::Integer) {
        return {line.slope_kind, line.k, Rational(line.r.floor())};
    }
    const Rational scaled = Rational(line.k) * line.r;
    return {line.slope_kind, line.k, Rational(scaled.floor(), BigInt(line.k))};
}

std::string_view to_string(QueryClass c) {
    switch (c) {
        case QueryClass::InDomain:
            return "in-domain";
        case QueryClass::OutsideStatedConditions:
            return "outside-stated-conditions";
        case QueryClass::Invalid:
            return "invalid";
    }
    return "invalid";
}

QueryValidation validate_query(const PathQuery& q) {
    if (q.boundary.k < 1) {
        return {QueryClass::Invalid, "slope parameter k must be >= 1"};
    }
    if (q.a < 0 || q.a > q.m || q.b > q.n) {
        return {QueryClass::Invalid, "endpoints must satisfy 0 <= a <= m and b <= n"};
    }
    if (!above(q.start(), q.boundary, q.strictness)) {
        return {QueryClass::Invalid, "start point violates the boundary"};
    }
    if (!above(q.end(), q.boundary, q.strictness)) {
        return {QueryClass::Invalid, "end point violates the boundary"};
    }
    if (!q.boundary.has_integral_intercept()) {
        // Off-lattice intercept: weak and strict coincide with the floored line.
        PathQuery normalized = q;
        normalized.boundary = normalize_intercept(q.boundary);
        normalized.strictness = Strictness::Weak;
        return validate_query(normalized);
    }
    if (q.strictness == Strictness::Weak && q.b < 0) {
        return {QueryClass::OutsideStatedConditions, "start ordinate b < 0"};
    }
    if (q.strictness == Strictness::Strict && q.b <= 0) {
        return {QueryClass::OutsideStatedConditions,
                "strict query with b <= 0 (stated conditions require b > max{0, ka - r})"};
    }
    return {QueryClass::InDomain, {}};
}

StepSet StepSet::koroljuk(std::int64_t p) {
    if (p < 1) {
        throw ValidationError("Koroljuk step parameter p must be >= 1");
    }
    return StepSet(Kind::Koroljuk, p);
}

StepSet StepSet::bohm(std::int64_t rise) {
    if (rise < 1) {
        throw ValidationError("Bohm rise must be >= 1");
    }
    return StepSet(Kind::Bohm, rise);
}

Point StepSet::first() const {
    switch (kind_) {
        case Kind::Unit:
            return {1, 0};
        case Kind::Koroljuk:
            return {1, 1};
        case Kind::Bohm:
            return {1, param_};
    }
    return {};
}

Point StepSet::second() const {
    switch (kind_) {
        case Kind::Unit:
            return {0, 1};
        case Kind::Koroljuk:
            return {-param_, 1};
        case Kind::Bohm:
            return {1, -1};
    }
    return {};
}

Point StepSet::step_for(char symbol) const {
    if (symbol == first_symbol()) {
        return first();
    }
    if (symbol == second_symbol()) {
        return second();
    }
    throw ValidationError(std::string("unknown step symbol '") + symbol + "'");
}

char StepSet::symbol_for(Point step) const {
    if (step == first()) {
        return first_symbol();
    }
    if (step == second()) {
        return second_symbol();
    }
    throw ValidationError("step " + to_string(step) + " not in step set");
}

LatticePath::LatticePath(Point start, StepSet set, std::vector<Point> steps)
    : start_(start), set_(set), steps_(std::move(steps)) {
    for (const Point& s : steps_) {
        if (!set_.contains(s)) {
            throw ValidationError("step " + to_string(s) + " not in step set");
        }
    }
}

LatticePath LatticePath::parse(Point start, StepSet set, std::string_view encoded) {
    std::vector<Point> steps;
    steps.reserve(encoded.size());
    for (const char c : encoded) {
        steps.push_back(set.step_for(c));
    }
    return LatticePath(start, set, std::move(steps));
}

Point LatticePath::end() const {
    Point p = start_;
    for (const Point& s : steps_) {
        p = p + s;
    }
    return p;
}

std::vector<Point> LatticePath::points() const {
    std::vector<Point> out;
    out.reserve(steps_.size() + 1);
    out.push_back(start_);
    for (const Point& s : steps_) {
        out.push_back(out.back() + s);
    }
    return out;
}

std::string LatticePath::encode() const {
    std::string out;
    out.reserve(steps_.size());
    for (const Point& s : steps_) {
        out.push_back(set_.symbol_for(s));
    }
    return out;
}

std::int64_t LatticePath::count_of(Point step) const {
    return std::count(steps_.begin(), steps_.end(), step);
}

bool is_member(const LatticePath& path, const PathQuery& q) {
    if (path.step_set() != StepSet::unit() || path.start() != q.start() || path.end() != q.end()) {
        return false;
    }
    const auto pts = path.points();
    return std::all_of(pts.begin(), pts.end(),
                       [&](Point p) { return above(p, q.boundary, q.strictness); });
}

}  // namespace latpath
