#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latpath/exactmath.hpp"
#include "latpath/formulas.hpp"

namespace latpath::identities {

/// Outcome of one identity check: named parameters, the compared values, pass/fail.
struct CheckReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::pair<std::string, std::string>> values;
    bool passed = false;

    /// "PASS name k=1 r=0 | lhs=2 rhs=2"
    std::string to_line() const;
    nlohmann::json to_json() const;
};

struct HagenRotheParams {
    Rational alpha;
    Rational beta;
    Rational gamma;
    std::int64_t n = 0;
};

/// (LHS, RHS) of sum_i g/(g+b i) C(g+b i, i) C(a+b(n-i), n-i) = C(a+g+b n, n).
/// Throws ValidationError if some g + b i vanishes or n < 0.
std::pair<Rational, Rational> hagen_rothe(const HagenRotheParams& p);
CheckReport hagen_rothe_check(const HagenRotheParams& p);

CheckReport upper_negation_check(const Rational& x, std::int64_t k);

/// C(m+n, n) = (paths meeting x = c) + (paths avoiding it), with the avoiding
/// side taken from the strict unit-path count (0 when that query is invalid).
struct ComplementResult {
    Count total;
    Count intersecting;
    Count avoiding;
    bool holds = false;
};

ComplementResult complement_check(std::int64_t p, std::int64_t c, std::int64_t m, std::int64_t n);
CheckReport complement_report(std::int64_t p, std::int64_t c, std::int64_t m, std::int64_t n);

/// L(a, b+1) = L(a, b) - L(a, b-k; m-1, n-k) over y = kx - r.
struct RecurrenceResult {
    Count next;      ///< L(a, b+1; m, n)
    Count current;   ///< L(a, b; m, n)
    Count shifted;   ///< L(a, b-k; m-1, n-k), 0 when a > m-1
    bool holds = false;
};

/// Requires k, m >= 1, 0 <= a <= m, n >= km - r, k(a+1) - r <= b <= n - 1.
RecurrenceResult recurrence_check(std::int64_t k, std::int64_t r, std::int64_t a, std::int64_t b,
                                  std::int64_t m, std::int64_t n);
CheckReport recurrence_report(std::int64_t k, std::int64_t r, std::int64_t a, std::int64_t b,
                              std::int64_t m, std::int64_t n);

/// Three evaluations of the strict count above y = k(x - d): the complement
/// form, the Koroljuk-substituted complement form, and count_strict.
struct StrictFormsResult {
    Count complement_form;
    Count substituted_form;
    Count strict_count;
    bool holds = false;
};

StrictFormsResult strict_forms_check(const NiederhausenQuery& q);
CheckReport strict_forms_report(const NiederhausenQuery& q);

}  // namespace latpath::identities
