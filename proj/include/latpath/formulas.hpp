#pragma once

#include <cstdint>

#include "latpath/exactmath.hpp"
#include "latpath/model.hpp"

namespace latpath {

// Closed-form counts. Every evaluator sums exact rational terms and throws
// InternalError if the total is not a nonnegative integer; precondition
// violations throw ValidationError.

/// Paths from (a,b) to (m,n) weakly above y = kx - r, integer r.
/// Requires k >= 1, 0 <= a <= m, b <= n, b + r >= ka, n + r >= km.
Count count_weak(std::int64_t k, std::int64_t r, std::int64_t a, std::int64_t b, std::int64_t m,
                 std::int64_t n);

/// Paths strictly above y = kx - r, integer r.
/// Requires k >= 1, 0 <= a <= m, b <= n, b + r > ka, n + r > km.
Count count_strict(std::int64_t k, std::int64_t r, std::int64_t a, std::int64_t b, std::int64_t m,
                   std::int64_t n);

/// Paths weakly above y = x/k - r, kr integer.
/// Requires k >= 1, 0 <= a <= m, b <= n, kb + kr >= a, kn + kr >= m.
Count count_weak_inv(std::int64_t k, const Rational& r, std::int64_t a, std::int64_t b,
                     std::int64_t m, std::int64_t n);

/// Paths strictly above y = x/k - r, kr integer.
Count count_strict_inv(std::int64_t k, const Rational& r, std::int64_t a, std::int64_t b,
                       std::int64_t m, std::int64_t n);

/// Weak count above y = kx from a start within k of the line:
/// (n+1-km)/(n+1-ka) * C(m+n-(k+1)a, m-a).
Count base_case(std::int64_t k, std::int64_t a, std::int64_t b, std::int64_t m, std::int64_t n);

/// Generalized ballot number C(m+n, m) - k C(m+n, m-1); requires n >= km.
Count ballot(std::int64_t k, std::int64_t m, std::int64_t n);

/// Order-k Fuss-Catalan number C(km, m) / ((k-1)m + 1); requires k >= 2.
Count fuss_catalan(std::int64_t k, std::int64_t m);

/// Paths from (0,0) to (m - pn, m + n) with m steps (1,1) and n steps (-p,1).
struct KoroljukQuery {
    std::int64_t p = 1;
    std::int64_t c = 1;
    std::int64_t m = 1;
    std::int64_t n = 1;
};

/// Number of Koroljuk paths meeting the line x = c, summed over s = c mod (p+1).
Count koroljuk_literal(const KoroljukQuery& q);
/// Same count, summed over i = (s - c)/(p+1).
Count koroljuk_reduced(const KoroljukQuery& q);

/// Paths from (0,0) to (m,n) strictly above y = k(x - d), kd integral.
struct NiederhausenQuery {
    std::int64_t k = 1;
    Rational d;
    std::int64_t m = 0;
    std::int64_t n = 0;
};

/// Endpoints strictly above the line and d >= (k-1)m/k => InDomain.
/// d below that bound => OutsideStatedConditions. Anything else => Invalid.
QueryValidation validate_niederhausen(const NiederhausenQuery& q);

/// C(m+n, m) minus the crossing paths; requires a InDomain query.
Count niederhausen(const NiederhausenQuery& q);

/// Paths with `ups` steps (1,rise) and any number of (1,-1) steps from altitude
/// start_alt to end_alt, never touching altitude 0.
struct BohmQuery {
    std::int64_t rise = 1;
    std::int64_t start_alt = 1;
    std::int64_t end_alt = 1;
    std::int64_t ups = 0;

    std::int64_t downs() const { return start_alt + rise * ups - end_alt; }
};

Count bohm(const BohmQuery& q);

/// Total counting entry point: 0 for invalid queries, otherwise dispatches to
/// the matching closed form after normalizing off-lattice intercepts.
Count count_paths(const PathQuery& q);

}  // namespace latpath
