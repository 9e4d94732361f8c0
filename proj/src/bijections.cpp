#include "latpath/bijections.hpp"

#include <algorithm>
#include <string>

#include "latpath/errors.hpp"

namespace latpath::bijections {

namespace {

void fail(const char* op, const std::string& what) {
    throw ValidationError(std::string(op) + ": " + what);
}

PathQuery spanning(const LatticePath& path, const BoundaryLine& line, Strictness s) {
    const Point a = path.start();
    const Point e = path.end();
    return PathQuery{a.x, a.y, e.x, e.y, line, s};
}

void require_member(const LatticePath& path, const BoundaryLine& line, Strictness s,
                    const char* op) {
    if (path.step_set() != StepSet::unit()) {
        fail(op, "expected a unit-step path");
    }
    const PathQuery q = spanning(path, line, s);
    if (!is_member(path, q)) {
        fail(op, "path " + path.encode() + " is not in " + to_string(q));
    }
}

std::int64_t integral(const Rational& r, const char* op) {
    if (!r.is_integer()) {
        fail(op, "intercept must be an integer, got " + r.str());
    }
    return r.to_integer().get_si();
}

void require_integer_slope(const BoundaryLine& line, const char* op) {
    if (line.slope_kind != SlopeKind::Integer) {
        fail(op, "requires an integer-slope boundary y = kx - r");
    }
}

LatticePath shifted(const LatticePath& path, Point by) {
    return LatticePath(path.start() + by, path.step_set(), path.steps());
}

/// Reverses the step order and sends `from.first()` to `to_first`, `from.second()` to `to_second`.
LatticePath reverse_relabel(const LatticePath& path, Point start, StepSet to, Point to_first,
                            Point to_second) {
    const StepSet& from = path.step_set();
    std::vector<Point> steps;
    steps.reserve(path.size());
    for (auto it = path.steps().rbegin(); it != path.steps().rend(); ++it) {
        steps.push_back(*it == from.first() ? to_first : to_second);
    }
    return LatticePath(start, to, std::move(steps));
}

void require_koroljuk(const LatticePath& path, std::int64_t c, const char* op) {
    if (path.step_set().kind() != StepSet::Kind::Koroljuk) {
        fail(op, "expected a Koroljuk (U=(1,1), D=(-p,1)) path");
    }
    if (path.start() != Point{0, 0}) {
        fail(op, "Koroljuk paths start at the origin");
    }
    if (c < 1) {
        fail(op, "c must be >= 1");
    }
    const auto pts = path.points();
    if (std::any_of(pts.begin(), pts.end(), [c](Point p) { return p.x == c; })) {
        fail(op, "path " + path.encode() + " meets the line x = " + std::to_string(c));
    }
}

void require_bohm(const LatticePath& path, const char* op) {
    if (path.step_set().kind() != StepSet::Kind::Bohm) {
        fail(op, "expected a Bohm (U=(1,rise), D=(1,-1)) path");
    }
    const auto pts = path.points();
    if (std::any_of(pts.begin(), pts.end(), [](Point p) { return p.y < 1; })) {
        fail(op, "path " + path.encode() + " touches or crosses altitude 0");
    }
}

}  // namespace

LatticePath drop_one(const LatticePath& path, const BoundaryLine& line) {
    constexpr const char* op = "drop_one";
    require_integer_slope(line, op);
    integral(line.r, op);
    require_member(path, line, Strictness::Strict, op);
    return shifted(path, {0, -1});
}

LatticePath raise_one(const LatticePath& path, const BoundaryLine& line) {
    constexpr const char* op = "raise_one";
    require_integer_slope(line, op);
    integral(line.r, op);
    require_member(path, line, Strictness::Weak, op);
    return shifted(path, {0, 1});
}

PathQuery drop_one_target(const PathQuery& source) {
    return PathQuery{source.a, source.b - 1, source.m, source.n - 1, source.boundary,
                     Strictness::Weak};
}

LatticePath lemma_translate(const LatticePath& path, const BoundaryLine& line) {
    constexpr const char* op = "lemma_translate";
    require_integer_slope(line, op);
    require_member(path, line, Strictness::Weak, op);
    if (path.start().x < 1) {
        fail(op, "source paths start at abscissa a + 1 >= 1");
    }
    return shifted(path, {-1, -line.k});
}

LatticePath lemma_untranslate(const LatticePath& path, const BoundaryLine& line) {
    constexpr const char* op = "lemma_untranslate";
    require_integer_slope(line, op);
    require_member(path, line, Strictness::Weak, op);
    if (path.start().x < 0) {
        fail(op, "target paths start at abscissa a >= 0");
    }
    return shifted(path, {1, line.k});
}

PathQuery lemma_translate_target(const PathQuery& source) {
    const std::int64_t k = source.boundary.k;
    return PathQuery{source.a - 1, source.b - k, source.m - 1, source.n - k, source.boundary,
                     Strictness::Weak};
}

namespace {

std::int64_t inverse_shift(const BoundaryLine& line, const char* op) {
    if (line.slope_kind != SlopeKind::Inverse) {
        fail(op, "requires an inverse-slope boundary y = x/k - r");
    }
    return integral(Rational(line.k) * line.r, op);
}

}  // namespace

LatticePath reflect_inverse(const LatticePath& path, const BoundaryLine& line) {
    constexpr const char* op = "reflect_inverse";
    const std::int64_t kr = inverse_shift(line, op);
    require_member(path, line, Strictness::Weak, op);
    const Point end = path.end();
    const StepSet unit = StepSet::unit();
    return reverse_relabel(path, {0, line.k * end.y + kr - end.x}, unit, unit.second(),
                           unit.first());
}

LatticePath unreflect_inverse(const LatticePath& path, const BoundaryLine& line,
                              Point original_end) {
    constexpr const char* op = "unreflect_inverse";
    const std::int64_t kr = inverse_shift(line, op);
    const std::int64_t k = line.k;
    require_member(path, BoundaryLine::integer_slope(k, 0), Strictness::Weak, op);
    const std::int64_t top = k * original_end.y + kr;  // k(n + r)
    if (path.start() != Point{0, top - original_end.x}) {
        fail(op, "path does not start at (0, k(n+r) - m) for the given end point");
    }
    const Point end = path.end();
    const Point start{top - end.y, original_end.y - end.x};
    const StepSet unit = StepSet::unit();
    LatticePath out = reverse_relabel(path, start, unit, unit.second(), unit.first());
    require_member(out, line, Strictness::Weak, op);
    return out;
}

PathQuery reflect_inverse_target(const PathQuery& source) {
    const std::int64_t k = source.boundary.k;
    const std::int64_t top =
        k * source.n + (Rational(k) * source.boundary.r).to_integer().get_si();
    return PathQuery{0,
                     top - source.m,
                     source.n - source.b,
                     top - source.a,
                     BoundaryLine::integer_slope(k, 0),
                     Strictness::Weak};
}

LatticePath koroljuk_to_unit(const LatticePath& path, std::int64_t c) {
    require_koroljuk(path, c, "koroljuk_to_unit");
    const StepSet unit = StepSet::unit();
    return reverse_relabel(path, {0, 0}, unit, unit.second(), unit.first());
}

LatticePath unit_to_koroljuk(const LatticePath& path, const BoundaryLine& line, std::int64_t c) {
    constexpr const char* op = "unit_to_koroljuk";
    require_integer_slope(line, op);
    const std::int64_t v = integral(line.r, op);
    require_member(path, line, Strictness::Strict, op);
    if (path.start() != Point{0, 0}) {
        fail(op, "source paths start at the origin");
    }
    const StepSet unit = StepSet::unit();
    const std::int64_t p = line.k;
    const std::int64_t n = path.count_of(unit.first());
    const std::int64_t m = path.count_of(unit.second());
    if (v != c + p * n - m) {
        fail(op, "parameter mismatch: v = " + std::to_string(v) + " but c + pn - m = " +
                     std::to_string(c + p * n - m));
    }
    const StepSet kor = StepSet::koroljuk(p);
    // H came from D, V came from U.
    return reverse_relabel(path, {0, 0}, kor, kor.second(), kor.first());
}

PathQuery koroljuk_target(std::int64_t p, std::int64_t c, std::int64_t m, std::int64_t n) {
    return PathQuery{0, 0, n, m, BoundaryLine::integer_slope(p, c + p * n - m),
                     Strictness::Strict};
}

LatticePath bohm_rotate(const LatticePath& path, std::int64_t c) {
    require_koroljuk(path, c, "bohm_rotate");
    const StepSet bohm = StepSet::bohm(path.step_set().param());
    std::vector<Point> steps;
    steps.reserve(path.size());
    for (const Point& s : path.steps()) {
        steps.push_back({s.y, -s.x});  // (x, y) -> (y, c - x)
    }
    return LatticePath({0, c}, bohm, std::move(steps));
}

LatticePath bohm_unrotate(const LatticePath& path, std::int64_t c) {
    constexpr const char* op = "bohm_unrotate";
    require_bohm(path, op);
    if (path.start() != Point{0, c}) {
        fail(op, "path must start at (0, c)");
    }
    const StepSet kor = StepSet::koroljuk(path.step_set().param());
    std::vector<Point> steps;
    steps.reserve(path.size());
    for (const Point& s : path.steps()) {
        steps.push_back({-s.y, s.x});  // (X, Y) -> (c - Y, X)
    }
    return LatticePath({0, 0}, kor, std::move(steps));
}

LatticePath bohm_to_unit(const LatticePath& path) {
    require_bohm(path, "bohm_to_unit");
    const StepSet unit = StepSet::unit();
    return reverse_relabel(path, {0, 0}, unit, unit.first(), unit.second());
}

LatticePath unit_to_bohm(const LatticePath& path, const BoundaryLine& line) {
    constexpr const char* op = "unit_to_bohm";
    require_integer_slope(line, op);
    const std::int64_t end_alt = integral(line.r, op);
    require_member(path, line, Strictness::Strict, op);
    if (path.start() != Point{0, 0}) {
        fail(op, "source paths start at the origin");
    }
    const Point e = path.end();
    const std::int64_t start_alt = e.y - line.k * e.x + end_alt;
    const StepSet bohm = StepSet::bohm(line.k);
    return reverse_relabel(path, {0, start_alt}, bohm, bohm.first(), bohm.second());
}

}  // namespace latpath::bijections
