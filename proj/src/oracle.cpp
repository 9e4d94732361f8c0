#include "latpath/oracle.hpp"

#include <functional>
#include <string>

#include "latpath/errors.hpp"

namespace latpath::oracle {

namespace {

/// Boundary test by cross-multiplication in machine integers. Deliberately
/// does not reuse latpath::above so the oracle stays independent.
class Predicate {
public:
    Predicate(const BoundaryLine& line, Strictness strictness)
        : inverse_(line.slope_kind == SlopeKind::Inverse),
          strict_(strictness == Strictness::Strict),
          k_(line.k) {
        const BigInt num = line.r.numerator();
        const BigInt den = line.r.denominator();
        if (!num.fits_slong_p() || !den.fits_slong_p()) {
            throw ResourceError("oracle: intercept " + line.r.str() + " exceeds machine range");
        }
        num_ = num.get_si();
        den_ = den.get_si();
    }

    bool operator()(std::int64_t x, std::int64_t y) const {
        // Integer: den*y + num  vs  den*k*x.   Inverse: k*den*y + k*num  vs  den*x.
        const std::int64_t lhs = inverse_ ? k_ * (den_ * y + num_) : den_ * y + num_;
        const std::int64_t rhs = inverse_ ? den_ * x : den_ * k_ * x;
        return strict_ ? lhs > rhs : lhs >= rhs;
    }

private:
    bool inverse_;
    bool strict_;
    std::int64_t k_;
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

void guard(std::int64_t steps, const char* op) {
    if (steps > kMaxEnumeratedSteps) {
        throw ResourceError(std::string(op) + ": " + std::to_string(steps) +
                            " steps exceeds the enumeration guard of " +
                            std::to_string(kMaxEnumeratedSteps));
    }
}

/// Visits every sequence with `firsts` first-steps and `seconds` second-steps,
/// first-step branch before second-step branch.
void for_each_sequence(std::int64_t firsts, std::int64_t seconds, Point first, Point second,
                       const std::function<void(const std::vector<Point>&)>& visit) {
    std::vector<Point> seq;
    seq.reserve(static_cast<std::size_t>(firsts + seconds));
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t f, std::int64_t s) {
        if (f == 0 && s == 0) {
            visit(seq);
            return;
        }
        if (f > 0) {
            seq.push_back(first);
            rec(f - 1, s);
            seq.pop_back();
        }
        if (s > 0) {
            seq.push_back(second);
            rec(f, s - 1);
            seq.pop_back();
        }
    };
    rec(firsts, seconds);
}

bool touches_column(const std::vector<Point>& seq, std::int64_t c) {
    std::int64_t x = 0;
    if (x == c) {
        return true;
    }
    for (const Point& s : seq) {
        x += s.x;
        if (x == c) {
            return true;
        }
    }
    return false;
}

bool stays_positive(const std::vector<Point>& seq, std::int64_t start_alt) {
    std::int64_t y = start_alt;
    if (y < 1) {
        return false;
    }
    for (const Point& s : seq) {
        y += s.y;
        if (y < 1) {
            return false;
        }
    }
    return true;
}

std::int64_t bohm_downs(const BohmFamily& f) { return f.start_alt + f.rise * f.ups - f.end_alt; }

}  // namespace

Count dp_count(const PathQuery& q) {
    if (q.a > q.m || q.b > q.n) {
        return Count{};
    }
    const Predicate ok(q.boundary, q.strictness);
    const auto width = static_cast<std::size_t>(q.m - q.a + 1);
    const auto height = static_cast<std::size_t>(q.n - q.b + 1);
    std::vector<BigInt> table(width * height);
    for (std::size_t dy = 0; dy < height; ++dy) {
        for (std::size_t dx = 0; dx < width; ++dx) {
            const std::int64_t x = q.a + static_cast<std::int64_t>(dx);
            const std::int64_t y = q.b + static_cast<std::int64_t>(dy);
            BigInt& cell = table[dy * width + dx];
            if (!ok(x, y)) {
                cell = 0;
            } else if (dx == 0 && dy == 0) {
                cell = 1;
            } else {
                if (dx > 0) {
                    cell += table[dy * width + dx - 1];
                }
                if (dy > 0) {
                    cell += table[(dy - 1) * width + dx];
                }
            }
        }
    }
    return Count(table.back());
}

std::vector<LatticePath> enumerate_paths(const PathQuery& q) {
    std::vector<LatticePath> out;
    if (q.a > q.m || q.b > q.n) {
        return out;
    }
    guard(q.length(), "enumerate_paths");
    const Predicate ok(q.boundary, q.strictness);
    if (!ok(q.a, q.b)) {
        return out;
    }
    const StepSet unit = StepSet::unit();
    std::vector<Point> steps;
    std::function<void(Point)> rec = [&](Point at) {
        if (at == q.end()) {
            out.emplace_back(q.start(), unit, steps);
            return;
        }
        for (const Point step : {unit.first(), unit.second()}) {
            const Point next = at + step;
            if (next.x <= q.m && next.y <= q.n && ok(next.x, next.y)) {
                steps.push_back(step);
                rec(next);
                steps.pop_back();
            }
        }
    };
    rec(q.start());
    return out;
}

KoroljukCounts count_stepset(const KoroljukFamily& f) {
    guard(f.m + f.n, "count_stepset");
    const StepSet set = StepSet::koroljuk(f.p);
    KoroljukCounts counts;
    BigInt avoiding = 0;
    BigInt intersecting = 0;
    for_each_sequence(f.m, f.n, set.first(), set.second(), [&](const std::vector<Point>& seq) {
        if (touches_column(seq, f.c)) {
            ++intersecting;
        } else {
            ++avoiding;
        }
    });
    counts.avoiding = Count(avoiding);
    counts.intersecting = Count(intersecting);
    return counts;
}

Count count_stepset(const BohmFamily& f) {
    const std::int64_t downs = bohm_downs(f);
    if (downs < 0 || f.ups < 0) {
        return Count{};
    }
    guard(f.ups + downs, "count_stepset");
    const StepSet set = StepSet::bohm(f.rise);
    BigInt valid = 0;
    for_each_sequence(f.ups, downs, set.first(), set.second(), [&](const std::vector<Point>& seq) {
        if (stays_positive(seq, f.start_alt)) {
            ++valid;
        }
    });
    return Count(valid);
}

std::vector<LatticePath> enumerate_stepset(const KoroljukFamily& f) {
    guard(f.m + f.n, "enumerate_stepset");
    const StepSet set = StepSet::koroljuk(f.p);
    std::vector<LatticePath> out;
    for_each_sequence(f.m, f.n, set.first(), set.second(), [&](const std::vector<Point>& seq) {
        if (!touches_column(seq, f.c)) {
            out.emplace_back(Point{0, 0}, set, seq);
        }
    });
    return out;
}

std::vector<LatticePath> enumerate_stepset(const BohmFamily& f) {
    std::vector<LatticePath> out;
    const std::int64_t downs = bohm_downs(f);
    if (downs < 0 || f.ups < 0) {
        return out;
    }
    guard(f.ups + downs, "enumerate_stepset");
    const StepSet set = StepSet::bohm(f.rise);
    for_each_sequence(f.ups, downs, set.first(), set.second(), [&](const std::vector<Point>& seq) {
        if (stays_positive(seq, f.start_alt)) {
            out.emplace_back(Point{0, f.start_alt}, set, seq);
        }
    });
    return out;
}

}  // namespace latpath::oracle
