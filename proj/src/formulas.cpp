#include "latpath/formulas.hpp"

#include <algorithm>
#include <string>

#include "latpath/errors.hpp"

namespace latpath {

namespace {

void require(bool cond, const char* op, const std::string& what) {
    if (!cond) {
        throw ValidationError(std::string(op) + ": " + what);
    }
}

/// Binomial inside a summation range; the range bounds guarantee a
/// nonnegative upper index, so a negative one is a transcription bug.
Rational term_binomial(std::int64_t upper, std::int64_t lower, const char* op) {
    if (upper < 0) {
        throw InternalError(std::string(op) + ": negative binomial upper index " +
                            std::to_string(upper) + " inside summation range");
    }
    return Rational(binomial(upper, lower).value());
}

Rational ratio(std::int64_t num, std::int64_t den, const char* op) {
    if (den == 0) {
        throw InternalError(std::string(op) + ": zero denominator inside summation range");
    }
    return Rational(BigInt(num), BigInt(den));
}

Count finish(const Rational& total, const char* op) {
    if (!total.is_integer() || total < Rational(0)) {
        throw InternalError(std::string(op) + ": closed form evaluated to " + total.str());
    }
    return Count(total.to_integer());
}

Rational signed_term(std::int64_t i, Rational term) { return i % 2 == 0 ? term : -term; }

std::int64_t integral_kr(std::int64_t k, const Rational& r, const char* op) {
    const Rational kr = Rational(k) * r;
    require(kr.is_integer(), op, "kr must be an integer, got " + kr.str());
    return kr.to_integer().get_si();
}

}  // namespace

Count count_weak(std::int64_t k, std::int64_t r, std::int64_t a, std::int64_t b, std::int64_t m,
                 std::int64_t n) {
    constexpr const char* op = "count_weak";
    require(k >= 1, op, "k >= 1");
    require(0 <= a && a <= m, op, "0 <= a <= m");
    require(b <= n, op, "b <= n");
    require(b + r >= k * a, op, "start (a,b) must lie on or above y = kx - r");
    require(n + r >= k * m, op, "end (m,n) must lie on or above y = kx - r");

    const std::int64_t top = std::min(floor_div(b + r - k * a, k + 1), m - a);
    Rational total;
    for (std::int64_t i = 0; i <= top; ++i) {
        const std::int64_t ai = a + i;
        Rational term = ratio(n + r + 1 - k * m, n + r + 1 - k * ai, op) *
                        term_binomial(m + n + r - (k + 1) * ai, m - ai, op) *
                        term_binomial(b + r - k * ai, i, op);
        total += signed_term(i, std::move(term));
    }
    return finish(total, op);
}

Count count_strict(std::int64_t k, std::int64_t r, std::int64_t a, std::int64_t b, std::int64_t m,
                   std::int64_t n) {
    constexpr const char* op = "count_strict";
    require(k >= 1, op, "k >= 1");
    require(0 <= a && a <= m, op, "0 <= a <= m");
    require(b <= n, op, "b <= n");
    require(b + r > k * a, op, "start (a,b) must lie strictly above y = kx - r");
    require(n + r > k * m, op, "end (m,n) must lie strictly above y = kx - r");

    const std::int64_t top = std::min(floor_div(b + r - 1 - k * a, k + 1), m - a);
    Rational total;
    for (std::int64_t i = 0; i <= top; ++i) {
        const std::int64_t ai = a + i;
        const std::int64_t upper = m + n + r - (k + 1) * ai;
        Rational term = ratio(n + r - k * m, upper, op) * term_binomial(upper, m - ai, op) *
                        term_binomial(b + r - 1 - k * ai, i, op);
        total += signed_term(i, std::move(term));
    }
    return finish(total, op);
}

Count count_weak_inv(std::int64_t k, const Rational& r, std::int64_t a, std::int64_t b,
                     std::int64_t m, std::int64_t n) {
    constexpr const char* op = "count_weak_inv";
    require(k >= 1, op, "k >= 1");
    const std::int64_t kr = integral_kr(k, r, op);
    require(0 <= a && a <= m, op, "0 <= a <= m");
    require(b <= n, op, "b <= n");
    require(k * b + kr >= a, op, "start (a,b) must lie on or above y = x/k - r");
    require(k * n + kr >= m, op, "end (m,n) must lie on or above y = x/k - r");

    const std::int64_t top = std::min(floor_div(k * n + kr - m, k + 1), n - b);
    Rational total;
    for (std::int64_t i = 0; i <= top; ++i) {
        Rational term = ratio(k * b + kr - a + 1, k * (n - i) + kr - a + 1, op) *
                        term_binomial((k + 1) * (n - i) - a - b + kr, n - b - i, op) *
                        term_binomial(k * (n - i) + kr - m, i, op);
        total += signed_term(i, std::move(term));
    }
    return finish(total, op);
}

Count count_strict_inv(std::int64_t k, const Rational& r, std::int64_t a, std::int64_t b,
                       std::int64_t m, std::int64_t n) {
    constexpr const char* op = "count_strict_inv";
    require(k >= 1, op, "k >= 1");
    const std::int64_t kr = integral_kr(k, r, op);
    require(0 <= a && a <= m, op, "0 <= a <= m");
    require(b <= n, op, "b <= n");
    require(k * b + kr > a, op, "start (a,b) must lie strictly above y = x/k - r");
    require(k * n + kr > m, op, "end (m,n) must lie strictly above y = x/k - r");

    const std::int64_t top = std::min(floor_div(k * n + kr - m - 1, k + 1), n - b);
    Rational total;
    for (std::int64_t i = 0; i <= top; ++i) {
        const std::int64_t upper = (k + 1) * (n - i) - a - b + kr;
        Rational term = ratio(k * b + kr - a, upper, op) * term_binomial(upper, n - b - i, op) *
                        term_binomial(k * (n - i) + kr - m - 1, i, op);
        total += signed_term(i, std::move(term));
    }
    return finish(total, op);
}

Count base_case(std::int64_t k, std::int64_t a, std::int64_t b, std::int64_t m, std::int64_t n) {
    constexpr const char* op = "base_case";
    require(k >= 1 && m >= 1, op, "k, m >= 1");
    require(0 <= a && a <= m, op, "0 <= a <= m");
    require(0 <= b && b <= n, op, "0 <= b <= n");
    require(n >= k * m, op, "n >= km");
    require(0 <= b - k * a && b - k * a <= k, op, "0 <= b - ka <= k");
    const Rational value = ratio(n + 1 - k * m, n + 1 - k * a, op) *
                           term_binomial(m + n - (k + 1) * a, m - a, op);
    return finish(value, op);
}

Count ballot(std::int64_t k, std::int64_t m, std::int64_t n) {
    constexpr const char* op = "ballot";
    require(k >= 1, op, "k >= 1");
    require(m >= 0, op, "m >= 0");
    require(n >= k * m, op, "n >= km");
    const BigInt value = binomial(m + n, m).value() - k * binomial(m + n, m - 1).value();
    return finish(Rational(value), op);
}

Count fuss_catalan(std::int64_t k, std::int64_t m) {
    constexpr const char* op = "fuss_catalan";
    require(k >= 2, op, "k >= 2");
    require(m >= 0, op, "m >= 0");
    return finish(ratio(1, (k - 1) * m + 1, op) * term_binomial(k * m, m, op), op);
}

namespace {

void require_koroljuk(const KoroljukQuery& q, const char* op) {
    require(q.p >= 1 && q.c >= 1 && q.m >= 1 && q.n >= 1, op, "p, c, m, n >= 1");
}

}  // namespace

Count koroljuk_literal(const KoroljukQuery& q) {
    constexpr const char* op = "koroljuk_literal";
    require_koroljuk(q, op);
    const std::int64_t period = q.p + 1;
    const std::int64_t last = q.c + floor_div(q.m + q.n - q.c, period) * period;
    Rational total;
    for (std::int64_t s = 1; s <= last; ++s) {
        if ((s - q.c) % period != 0) {
            continue;
        }
        const std::int64_t j = (s - q.c) / period;
        if (j < 0) {
            continue;  // C(s, j) = 0
        }
        total += ratio(q.c, s, op) * term_binomial(s, j, op) *
                 term_binomial(q.m + q.n - s, q.n - j, op);
    }
    return finish(total, op);
}

Count koroljuk_reduced(const KoroljukQuery& q) {
    constexpr const char* op = "koroljuk_reduced";
    require_koroljuk(q, op);
    const std::int64_t period = q.p + 1;
    const std::int64_t top = floor_div(q.m + q.n - q.c, period);
    Rational total;
    for (std::int64_t i = 0; i <= top; ++i) {
        const std::int64_t s = q.c + period * i;
        total += ratio(q.c, s, op) * term_binomial(s, i, op) *
                 term_binomial(q.m + q.n - s, q.n - i, op);
    }
    return finish(total, op);
}

QueryValidation validate_niederhausen(const NiederhausenQuery& q) {
    if (q.k < 1 || q.m < 0 || q.n < 0) {
        return {QueryClass::Invalid, "requires k >= 1 and m, n >= 0"};
    }
    const Rational kd = Rational(q.k) * q.d;
    if (!kd.is_integer()) {
        return {QueryClass::Invalid, "kd must be an integer, got " + kd.str()};
    }
    const std::int64_t shift = kd.to_integer().get_si();
    if (shift < 1) {
        return {QueryClass::Invalid, "origin must lie strictly above y = k(x - d) (kd >= 1)"};
    }
    if (q.n <= q.k * q.m - shift) {
        return {QueryClass::Invalid, "end point must lie strictly above y = k(x - d)"};
    }
    if (shift < (q.k - 1) * q.m) {
        return {QueryClass::OutsideStatedConditions, "requires d >= (k-1)m/k"};
    }
    return {QueryClass::InDomain, {}};
}

Count niederhausen(const NiederhausenQuery& q) {
    constexpr const char* op = "niederhausen";
    const QueryValidation v = validate_niederhausen(q);
    require(v.cls == QueryClass::InDomain, op, v.reason);

    const std::int64_t k = q.k;
    const std::int64_t m = q.m;
    const std::int64_t n = q.n;
    const std::int64_t kd = (Rational(k) * q.d).to_integer().get_si();
    Rational crossing;
    for (std::int64_t i = floor_div(kd - 1, k + 1) + 1; i <= m; ++i) {
        const std::int64_t lift = n - k * i + kd;  // n - k(i - d)
        crossing += ratio(n - k * m + kd, lift, op) * term_binomial(i + k * i - kd, i, op) *
                    term_binomial(m - i - 1 + lift, m - i, op);
    }
    return finish(Rational(binomial(m + n, m).value()) - crossing, op);
}

Count bohm(const BohmQuery& q) {
    constexpr const char* op = "bohm";
    require(q.rise >= 1, op, "rise >= 1");
    require(q.start_alt >= 1 && q.end_alt >= 1, op, "altitudes >= 1");
    require(q.ups >= 0, op, "ups >= 0");
    require(q.downs() >= 0, op, "start_alt + rise*ups - end_alt >= 0");

    const std::int64_t top = std::min(floor_div(q.end_alt - 1, q.rise + 1), q.ups);
    Rational total;
    for (std::int64_t l = 0; l <= top; ++l) {
        const std::int64_t upper = q.start_alt + (q.rise + 1) * (q.ups - l);
        Rational term = ratio(q.start_alt, upper, op) * term_binomial(upper, q.ups - l, op) *
                        term_binomial(q.end_alt - q.rise * l - 1, l, op);
        total += signed_term(l, std::move(term));
    }
    return finish(total, op);
}

Count count_paths(const PathQuery& q) {
    if (validate_query(q).cls == QueryClass::Invalid) {
        return Count{};
    }
    PathQuery query = q;
    if (!query.boundary.has_integral_intercept()) {
        query.boundary = normalize_intercept(query.boundary);
        query.strictness = Strictness::Weak;
    }
    const BoundaryLine& line = query.boundary;
    const bool strict = query.strictness == Strictness::Strict;
    if (line.slope_kind == SlopeKind::Integer) {
        const std::int64_t r = line.r.to_integer().get_si();
        return strict ? count_strict(line.k, r, q.a, q.b, q.m, q.n)
                      : count_weak(line.k, r, q.a, q.b, q.m, q.n);
    }
    return strict ? count_strict_inv(line.k, line.r, q.a, q.b, q.m, q.n)
                  : count_weak_inv(line.k, line.r, q.a, q.b, q.m, q.n);
}

}  // namespace latpath
