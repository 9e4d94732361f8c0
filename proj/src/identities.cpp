#include "latpath/identities.hpp"

#include <sstream>

#include "latpath/errors.hpp"

namespace latpath::identities {

std::string CheckReport::to_line() const {
    std::ostringstream os;
    os << (passed ? "PASS " : "FAIL ") << name;
    for (const auto& [key, value] : parameters) {
        os << ' ' << key << '=' << value;
    }
    os << " |";
    for (const auto& [key, value] : values) {
        os << ' ' << key << '=' << value;
    }
    return os.str();
}

nlohmann::json CheckReport::to_json() const {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : parameters) {
        params[key] = value;
    }
    nlohmann::json vals = nlohmann::json::object();
    for (const auto& [key, value] : values) {
        vals[key] = value;
    }
    return {{"check", name}, {"parameters", params}, {"values", vals}, {"pass", passed}};
}

namespace {

std::string s(std::int64_t v) { return std::to_string(v); }

}  // namespace

std::pair<Rational, Rational> hagen_rothe(const HagenRotheParams& p) {
    if (p.n < 0) {
        throw ValidationError("hagen_rothe: n must be >= 0");
    }
    Rational lhs;
    for (std::int64_t i = 0; i <= p.n; ++i) {
        const Rational upper = p.gamma + p.beta * Rational(i);
        if (upper == Rational(0)) {
            throw ValidationError("hagen_rothe: gamma + beta*" + s(i) + " is zero");
        }
        const Rational lead = p.gamma / upper;
        lhs += lead * generalized_binomial(upper, i) *
               generalized_binomial(p.alpha + p.beta * Rational(p.n - i), p.n - i);
    }
    const Rational rhs = generalized_binomial(p.alpha + p.gamma + p.beta * Rational(p.n), p.n);
    return {lhs, rhs};
}

CheckReport hagen_rothe_check(const HagenRotheParams& p) {
    const auto [lhs, rhs] = hagen_rothe(p);
    return {"hagen_rothe",
            {{"alpha", p.alpha.str()}, {"beta", p.beta.str()}, {"gamma", p.gamma.str()}, {"n", s(p.n)}},
            {{"lhs", lhs.str()}, {"rhs", rhs.str()}},
            lhs == rhs};
}

CheckReport upper_negation_check(const Rational& x, std::int64_t k) {
    const auto [direct, negated] = upper_negation(x, k);
    return {"upper_negation",
            {{"x", x.str()}, {"k", s(k)}},
            {{"lhs", direct.str()}, {"rhs", negated.str()}},
            direct == negated};
}

ComplementResult complement_check(std::int64_t p, std::int64_t c, std::int64_t m, std::int64_t n) {
    ComplementResult out;
    out.total = binomial(m + n, n);
    out.intersecting = koroljuk_reduced({p, c, m, n});
    const std::int64_t v = c + p * n - m;
    // (n, m) is always strictly above y = px - v since c >= 1; only the origin can fail.
    out.avoiding = v >= 1 ? count_strict(p, v, 0, 0, n, m) : Count{};
    out.holds = out.total == out.intersecting + out.avoiding;
    return out;
}

CheckReport complement_report(std::int64_t p, std::int64_t c, std::int64_t m, std::int64_t n) {
    const ComplementResult r = complement_check(p, c, m, n);
    return {"complement",
            {{"p", s(p)}, {"c", s(c)}, {"m", s(m)}, {"n", s(n)}},
            {{"total", r.total.str()},
             {"intersecting", r.intersecting.str()},
             {"avoiding", r.avoiding.str()}},
            r.holds};
}

RecurrenceResult recurrence_check(std::int64_t k, std::int64_t r, std::int64_t a, std::int64_t b,
                                  std::int64_t m, std::int64_t n) {
    if (k < 1 || m < 1 || a < 0 || a > m || n < k * m - r || b < k * (a + 1) - r || b > n - 1) {
        throw ValidationError(
            "recurrence_check: requires k, m >= 1, 0 <= a <= m, n >= km - r, "
            "k(a+1) - r <= b <= n - 1");
    }
    RecurrenceResult out;
    out.next = count_weak(k, r, a, b + 1, m, n);
    out.current = count_weak(k, r, a, b, m, n);
    out.shifted = a <= m - 1 ? count_weak(k, r, a, b - k, m - 1, n - k) : Count{};
    out.holds = out.current == out.next + out.shifted;
    return out;
}

CheckReport recurrence_report(std::int64_t k, std::int64_t r, std::int64_t a, std::int64_t b,
                              std::int64_t m, std::int64_t n) {
    const RecurrenceResult res = recurrence_check(k, r, a, b, m, n);
    return {"recurrence",
            {{"k", s(k)}, {"r", s(r)}, {"a", s(a)}, {"b", s(b)}, {"m", s(m)}, {"n", s(n)}},
            {{"next", res.next.str()}, {"current", res.current.str()}, {"shifted", res.shifted.str()}},
            res.holds};
}

StrictFormsResult strict_forms_check(const NiederhausenQuery& q) {
    const QueryValidation v = validate_niederhausen(q);
    if (v.cls != QueryClass::InDomain) {
        throw ValidationError("strict_forms_check: " + v.reason);
    }
    const std::int64_t k = q.k;
    const std::int64_t m = q.m;
    const std::int64_t n = q.n;
    const std::int64_t kd = (Rational(k) * q.d).to_integer().get_si();

    // Subtrahend with the summation index substituted from Koroljuk's form:
    // sum_{i >= ceil(kd/(k+1))} (n-k(m-d))/(m+n+kd-(k+1)i) C(m+n+kd-(k+1)i, m-i) C((k+1)i-kd, i).
    const std::int64_t first = floor_div(kd + k, k + 1);  // ceil(kd / (k+1))
    Rational crossing;
    for (std::int64_t i = first; i <= m; ++i) {
        const std::int64_t upper = m + n + kd - (k + 1) * i;
        crossing += Rational(BigInt(n - k * m + kd), BigInt(upper)) *
                    Rational(binomial(upper, m - i).value()) *
                    Rational(binomial((k + 1) * i - kd, i).value());
    }
    const Rational substituted = Rational(binomial(m + n, m).value()) - crossing;
    if (!substituted.is_integer() || substituted < Rational(0)) {
        throw InternalError("strict_forms_check: substituted form evaluated to " + substituted.str());
    }

    StrictFormsResult out;
    out.complement_form = niederhausen(q);
    out.substituted_form = Count(substituted.to_integer());
    out.strict_count = count_strict(k, kd, 0, 0, m, n);
    out.holds = out.complement_form == out.substituted_form && out.complement_form == out.strict_count;
    return out;
}

CheckReport strict_forms_report(const NiederhausenQuery& q) {
    const StrictFormsResult r = strict_forms_check(q);
    return {"strict_forms",
            {{"k", s(q.k)}, {"d", q.d.str()}, {"m", s(q.m)}, {"n", s(q.n)}},
            {{"complement_form", r.complement_form.str()},
             {"substituted_form", r.substituted_form.str()},
             {"strict_count", r.strict_count.str()}},
            r.holds};
}

}  // namespace latpath::identities
