#include "latpath/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include "latpath/bijections.hpp"
#include "latpath/errors.hpp"
#include "latpath/formulas.hpp"
#include "latpath/oracle.hpp"

namespace latpath::verify {

using identities::CheckReport;

void Summary::merge(const Summary& other) {
    checks += other.checks;
    failures += other.failures;
    if (!first_failure && other.first_failure) {
        first_failure = other.first_failure;
    }
}

std::string Summary::to_text() const {
    std::ostringstream os;
    os << suite << ": " << checks << " checks, " << failures << " failures";
    if (first_failure) {
        os << "\nfirst counterexample: " << first_failure->to_line();
    }
    return os.str();
}

nlohmann::json Summary::to_json() const {
    nlohmann::json j = {{"suite", suite}, {"checks", checks}, {"failures", failures}};
    j["first_failure"] = first_failure ? first_failure->to_json() : nlohmann::json(nullptr);
    return j;
}

unsigned worker_threads() {
    if (const char* env = std::getenv("LATPATH_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

std::string s(std::int64_t v) { return std::to_string(v); }

/// Runs `check(i)` for i in [0, count) across workers. The summary does not
/// depend on the schedule: the first failure is the lowest failing index.
Summary run_indexed(std::string suite, std::size_t count,
                    const std::function<std::optional<CheckReport>(std::size_t)>& check) {
    std::vector<std::optional<CheckReport>> failures(count);
    const unsigned workers = std::min<unsigned>(worker_threads(), std::max<std::size_t>(count, 1));
    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < count; i += workers) {
            failures[i] = check(i);
        }
    };
    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
    }
    Summary out;
    out.suite = std::move(suite);
    out.checks = count;
    for (auto& f : failures) {
        if (f) {
            ++out.failures;
            if (!out.first_failure) {
                out.first_failure = std::move(f);
            }
        }
    }
    return out;
}

/// Accumulates sequential checks.
class Tally {
public:
    explicit Tally(std::string suite) { summary_.suite = std::move(suite); }

    void record(CheckReport report) {
        ++summary_.checks;
        if (!report.passed) {
            ++summary_.failures;
            if (!summary_.first_failure) {
                summary_.first_failure = std::move(report);
            }
        }
    }

    /// Runs `body`; an exception counts as a failed check.
    void guarded(const std::string& name, std::vector<std::pair<std::string, std::string>> params,
                 const std::function<CheckReport()>& body) {
        try {
            record(body());
        } catch (const std::exception& e) {
            record({name, std::move(params), {{"error", e.what()}}, false});
        }
    }

    Summary take() { return std::move(summary_); }

private:
    Summary summary_;
};

std::vector<std::pair<std::string, std::string>> query_params(const PathQuery& q) {
    return {{"line", to_string(q.boundary)},
            {"strictness", q.strictness == Strictness::Strict ? "strict" : "weak"},
            {"a", s(q.a)},
            {"b", s(q.b)},
            {"m", s(q.m)},
            {"n", s(q.n)}};
}

std::vector<PathQuery> sweep_queries(const SweepConfig& cfg) {
    std::vector<PathQuery> out;
    for (std::int64_t k = 1; k <= cfg.max_k; ++k) {
        for (std::int64_t r = cfg.r_min; r <= cfg.r_max; ++r) {
            for (const SlopeKind kind : {SlopeKind::Integer, SlopeKind::Inverse}) {
                const BoundaryLine line{kind, k, Rational(r)};
                for (const Strictness st : {Strictness::Weak, Strictness::Strict}) {
                    for (std::int64_t m = 0; m <= cfg.max_m; ++m) {
                        for (std::int64_t a = 0; a <= m; ++a) {
                            for (std::int64_t n = 0; n <= cfg.max_n; ++n) {
                                for (std::int64_t b = 0; b <= n; ++b) {
                                    PathQuery q{a, b, m, n, line, st};
                                    if (validate_query(q).cls != QueryClass::Invalid) {
                                        out.push_back(q);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

Count closed_form(const PathQuery& q) {
    const BoundaryLine& line = q.boundary;
    const bool strict = q.strictness == Strictness::Strict;
    if (line.slope_kind == SlopeKind::Integer) {
        const std::int64_t r = line.r.to_integer().get_si();
        return strict ? count_strict(line.k, r, q.a, q.b, q.m, q.n)
                      : count_weak(line.k, r, q.a, q.b, q.m, q.n);
    }
    return strict ? count_strict_inv(line.k, line.r, q.a, q.b, q.m, q.n)
                  : count_weak_inv(line.k, line.r, q.a, q.b, q.m, q.n);
}

}  // namespace

Summary oracle_sweep(const SweepConfig& cfg) {
    const std::vector<PathQuery> queries = sweep_queries(cfg);
    return run_indexed("formula-vs-oracle", queries.size(),
                       [&](std::size_t i) -> std::optional<CheckReport> {
                           const PathQuery& q = queries[i];
                           std::string formula;
                           try {
                               formula = closed_form(q).str();
                           } catch (const std::exception& e) {
                               formula = std::string("error: ") + e.what();
                           }
                           const std::string expected = oracle::dp_count(q).str();
                           if (formula == expected) {
                               return std::nullopt;
                           }
                           return CheckReport{"formula_vs_oracle", query_params(q),
                                              {{"formula", formula}, {"oracle", expected}}, false};
                       });
}

Summary shift_and_recurrence_sweep(const SweepConfig& cfg) {
    Tally tally("shift-and-recurrence");
    for (std::int64_t k = 1; k <= cfg.max_k; ++k) {
        for (std::int64_t r = cfg.r_min; r <= cfg.r_max; ++r) {
            for (std::int64_t m = 0; m <= cfg.max_m; ++m) {
                for (std::int64_t a = 0; a <= m; ++a) {
                    for (std::int64_t n = 0; n <= cfg.max_n; ++n) {
                        for (std::int64_t b = 0; b <= n; ++b) {
                            const std::vector<std::pair<std::string, std::string>> params{
                                {"k", s(k)}, {"r", s(r)}, {"a", s(a)},
                                {"b", s(b)}, {"m", s(m)}, {"n", s(n)}};
                            if (b >= 1 && b + r > k * a && n + r > k * m) {
                                tally.guarded("shift", params, [&] {
                                    const Count strict = count_strict(k, r, a, b, m, n);
                                    const Count weak = count_weak(k, r, a, b - 1, m, n - 1);
                                    return CheckReport{"shift", params,
                                                       {{"strict", strict.str()}, {"weak", weak.str()}},
                                                       strict == weak};
                                });
                            }
                            if (m >= 1 && n >= k * m - r && b >= k * (a + 1) - r && b <= n - 1) {
                                tally.guarded("recurrence", params, [&] {
                                    return identities::recurrence_report(k, r, a, b, m, n);
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    return tally.take();
}

Summary koroljuk_forms(std::int64_t max_p, std::int64_t max_c, std::int64_t max_m,
                       std::int64_t max_n) {
    Tally tally("koroljuk-forms");
    for (std::int64_t p = 1; p <= max_p; ++p) {
        for (std::int64_t c = 1; c <= max_c; ++c) {
            for (std::int64_t m = 1; m <= max_m; ++m) {
                for (std::int64_t n = 1; n <= max_n; ++n) {
                    std::vector<std::pair<std::string, std::string>> params{
                        {"p", s(p)}, {"c", s(c)}, {"m", s(m)}, {"n", s(n)}};
                    tally.guarded("koroljuk_forms", params, [&] {
                        const Count literal = koroljuk_literal({p, c, m, n});
                        const Count reduced = koroljuk_reduced({p, c, m, n});
                        return CheckReport{"koroljuk_forms", params,
                                           {{"literal", literal.str()}, {"reduced", reduced.str()}},
                                           literal == reduced};
                    });
                }
            }
        }
    }
    return tally.take();
}

Summary complement_grid(std::int64_t max_p, std::int64_t max_c, std::int64_t max_m,
                        std::int64_t max_n, std::int64_t stepset_limit) {
    Tally tally("complement");
    for (std::int64_t p = 1; p <= max_p; ++p) {
        for (std::int64_t c = 1; c <= max_c; ++c) {
            for (std::int64_t m = 1; m <= max_m; ++m) {
                for (std::int64_t n = 1; n <= max_n; ++n) {
                    std::vector<std::pair<std::string, std::string>> params{
                        {"p", s(p)}, {"c", s(c)}, {"m", s(m)}, {"n", s(n)}};
                    tally.guarded("complement", params,
                                  [&] { return identities::complement_report(p, c, m, n); });
                    if (m + n <= stepset_limit) {
                        tally.guarded("complement_stepset", params, [&] {
                            const auto closed = identities::complement_check(p, c, m, n);
                            const auto brute = oracle::count_stepset(oracle::KoroljukFamily{p, c, m, n});
                            return CheckReport{
                                "complement_stepset",
                                params,
                                {{"avoiding", closed.avoiding.str()},
                                 {"avoiding_brute", brute.avoiding.str()},
                                 {"intersecting", closed.intersecting.str()},
                                 {"intersecting_brute", brute.intersecting.str()}},
                                closed.avoiding == brute.avoiding &&
                                    closed.intersecting == brute.intersecting};
                        });
                    }
                }
            }
        }
    }
    return tally.take();
}

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 12);
    const int d = den(rng);
    // Map 1..12 onto {-6..-1, 1..6}.
    const int signed_den = d <= 6 ? -d : d - 6;
    return Rational(BigInt(num(rng)), BigInt(signed_den));
}

}  // namespace

Summary hagen_rothe_trials(std::size_t trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len(0, 12);
    Tally tally("hagen-rothe");
    std::size_t produced = 0;
    while (produced < trials) {
        identities::HagenRotheParams p{random_rational(rng), random_rational(rng),
                                       random_rational(rng), len(rng)};
        bool degenerate = false;
        for (std::int64_t i = 0; i <= p.n && !degenerate; ++i) {
            degenerate = p.gamma + p.beta * Rational(i) == Rational(0);
        }
        if (degenerate) {
            continue;
        }
        ++produced;
        tally.guarded("hagen_rothe", {}, [&] { return identities::hagen_rothe_check(p); });
    }
    return tally.take();
}

Summary upper_negation_trials(std::size_t trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> lower(0, 12);
    Tally tally("upper-negation");
    for (std::size_t t = 0; t < trials; ++t) {
        const Rational x = random_rational(rng);
        const int k = lower(rng);
        tally.guarded("upper_negation", {}, [&] { return identities::upper_negation_check(x, k); });
    }
    return tally.take();
}

Summary niederhausen_grid(std::int64_t max_k, std::int64_t max_mn) {
    Tally tally("niederhausen");
    for (std::int64_t k = 1; k <= max_k; ++k) {
        for (std::int64_t m = 0; m <= max_mn; ++m) {
            for (std::int64_t n = 0; n <= max_mn; ++n) {
                // kd spans every integral value for which the query is valid and in domain,
                // up to the point where the line no longer constrains the rectangle.
                for (std::int64_t kd = 1; kd <= (k + 1) * (m + 1) + 1; ++kd) {
                    const NiederhausenQuery q{k, Rational(BigInt(kd), BigInt(k)), m, n};
                    if (validate_niederhausen(q).cls != QueryClass::InDomain) {
                        continue;
                    }
                    std::vector<std::pair<std::string, std::string>> params{
                        {"k", s(k)}, {"d", q.d.str()}, {"m", s(m)}, {"n", s(n)}};
                    tally.guarded("niederhausen", params, [&] {
                        CheckReport report = identities::strict_forms_report(q);
                        const Count dp = oracle::dp_count(
                            {0, 0, m, n, BoundaryLine::integer_slope(k, kd), Strictness::Strict});
                        report.values.emplace_back("oracle", dp.str());
                        report.passed = report.passed && report.values[0].second == dp.str();
                        return report;
                    });
                }
            }
        }
    }
    return tally.take();
}

Summary bohm_grid(std::int64_t max_rise, std::int64_t max_alt, std::int64_t max_ups) {
    Tally tally("bohm");
    for (std::int64_t rise = 1; rise <= max_rise; ++rise) {
        for (std::int64_t start = 1; start <= max_alt; ++start) {
            for (std::int64_t end = 1; end <= max_alt; ++end) {
                for (std::int64_t ups = 0; ups <= max_ups; ++ups) {
                    const BohmQuery q{rise, start, end, ups};
                    if (q.downs() < 0) {
                        continue;
                    }
                    std::vector<std::pair<std::string, std::string>> params{
                        {"rise", s(rise)}, {"start", s(start)}, {"end", s(end)}, {"ups", s(ups)}};
                    tally.guarded("bohm", params, [&] {
                        const Count closed = bohm(q);
                        const Count strict = count_strict(rise, end, 0, 0, ups, q.downs());
                        const Count brute = oracle::count_stepset(oracle::BohmFamily{rise, start, end, ups});
                        return CheckReport{"bohm", params,
                                           {{"bohm", closed.str()},
                                            {"strict", strict.str()},
                                            {"brute", brute.str()}},
                                           closed == strict && closed == brute};
                    });
                }
            }
        }
    }
    return tally.take();
}

namespace {

const std::vector<std::pair<int, int>>& non_integer_rationals() {
    static const std::vector<std::pair<int, int>> values{
        {1, 2},  {-1, 2}, {1, 3},  {2, 3},  {5, 2},  {7, 3},  {-3, 2}, {-1, 3}, {3, 4},  {9, 4},
        {11, 5}, {-7, 4}, {1, 7},  {13, 6}, {4, 3},  {-5, 3}, {17, 8}, {5, 6},  {8, 5},  {-2, 7},
        {7, 2},  {-9, 4}, {10, 3}, {1, 5},  {-1, 6}};
    return values;
}

}  // namespace

Summary non_integer_intercepts(std::size_t how_many) {
    Tally tally("non-integer-intercept");
    const auto& values = non_integer_rationals();
    how_many = std::min(how_many, values.size());
    for (std::size_t idx = 0; idx < how_many; ++idx) {
        const Rational r(BigInt(values[idx].first), BigInt(values[idx].second));
        for (std::int64_t k = 1; k <= 3; ++k) {
            for (const SlopeKind kind : {SlopeKind::Integer, SlopeKind::Inverse}) {
                const BoundaryLine line{kind, k, r};
                const BoundaryLine normalized = normalize_intercept(line);
                for (std::int64_t m = 0; m <= 4; ++m) {
                    for (std::int64_t a = 0; a <= m; ++a) {
                        for (std::int64_t n = 0; n <= 6; ++n) {
                            for (std::int64_t b = 0; b <= n; ++b) {
                                const PathQuery weak{a, b, m, n, line, Strictness::Weak};
                                if (validate_query(weak).cls == QueryClass::Invalid) {
                                    continue;
                                }
                                const auto params = query_params(weak);
                                tally.guarded("non_integer_intercept", params, [&] {
                                    PathQuery strict = weak;
                                    strict.strictness = Strictness::Strict;
                                    PathQuery norm = weak;
                                    norm.boundary = normalized;
                                    PathQuery norm_strict = norm;
                                    if (line.has_integral_intercept()) {
                                        norm_strict.strictness = Strictness::Strict;
                                    }
                                    const Count w = oracle::dp_count(weak);
                                    const Count st = oracle::dp_count(strict);
                                    const Count nw = oracle::dp_count(norm);
                                    const Count ns = oracle::dp_count(norm_strict);
                                    const Count closed_w = count_paths(weak);
                                    const Count closed_s = count_paths(strict);
                                    return CheckReport{"non_integer_intercept", params,
                                                       {{"oracle_weak", w.str()},
                                                        {"oracle_strict", st.str()},
                                                        {"oracle_normalized", nw.str()},
                                                        {"oracle_normalized_strict", ns.str()},
                                                        {"closed_weak", closed_w.str()},
                                                        {"closed_strict", closed_s.str()}},
                                                       w == nw && st == ns && w == closed_w &&
                                                           st == closed_s};
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    return tally.take();
}

namespace {

using PathKey = std::pair<Point, std::string>;

PathKey key(const LatticePath& p) { return {p.start(), p.encode()}; }

std::set<PathKey> keys(const std::vector<LatticePath>& paths) {
    std::set<PathKey> out;
    for (const auto& p : paths) {
        out.insert(key(p));
    }
    return out;
}

/// One bijection instance: every source path maps into the target set,
/// images are distinct, the sets have equal size, and `back` undoes `forward`.
CheckReport check_transform(const std::string& name,
                            std::vector<std::pair<std::string, std::string>> params,
                            const std::vector<LatticePath>& source,
                            const std::vector<LatticePath>& target,
                            const std::function<LatticePath(const LatticePath&)>& forward,
                            const std::function<LatticePath(const LatticePath&)>& back) {
    const std::set<PathKey> target_keys = keys(target);
    std::set<PathKey> images;
    std::string problem;
    for (const auto& path : source) {
        const LatticePath image = forward(path);
        if (!target_keys.contains(key(image))) {
            problem = "image of " + path.encode() + " not in target";
            break;
        }
        if (!images.insert(key(image)).second) {
            problem = "image of " + path.encode() + " repeated";
            break;
        }
        if (!(back(image) == path)) {
            problem = "round trip failed on " + path.encode();
            break;
        }
    }
    if (problem.empty() && source.size() != target.size()) {
        problem = "cardinality mismatch";
    }
    return CheckReport{name,
                       std::move(params),
                       {{"source", s(static_cast<std::int64_t>(source.size()))},
                        {"target", s(static_cast<std::int64_t>(target.size()))},
                        {"problem", problem.empty() ? "none" : problem}},
                       problem.empty()};
}

// Unit-step families are translation invariant along the boundary, so the
// endpoint box of the oracle sweep covers every shape up to the step limit.
constexpr std::int64_t kUnitMaxM = 6;
constexpr std::int64_t kUnitMaxN = 8;

void unit_family_transforms(Tally& tally, std::int64_t max_steps) {
    using namespace bijections;
    for (std::int64_t k = 1; k <= 3; ++k) {
        for (std::int64_t r = -2; r <= 4; ++r) {
            const BoundaryLine line = BoundaryLine::integer_slope(k, r);
            const BoundaryLine inv = BoundaryLine::inverse_slope(k, Rational(r));
            for (std::int64_t m = 0; m <= kUnitMaxM; ++m) {
                for (std::int64_t a = 0; a <= m; ++a) {
                    for (std::int64_t n = 0; n <= kUnitMaxN; ++n) {
                        for (std::int64_t b = 0; b <= n; ++b) {
                            if ((m - a) + (n - b) > max_steps) {
                                continue;
                            }
                            const PathQuery strict{a, b, m, n, line, Strictness::Strict};
                            const PathQuery weak{a, b, m, n, line, Strictness::Weak};
                            const PathQuery weak_inv{a, b, m, n, inv, Strictness::Weak};
                            const std::vector<std::pair<std::string, std::string>> params{
                                {"k", s(k)}, {"r", s(r)}, {"a", s(a)},
                                {"b", s(b)}, {"m", s(m)}, {"n", s(n)}};

                            if (validate_query(strict).cls != QueryClass::Invalid) {
                                tally.guarded("drop_one", params, [&] {
                                    return check_transform(
                                        "drop_one", params, oracle::enumerate_paths(strict),
                                        oracle::enumerate_paths(drop_one_target(strict)),
                                        [&](const LatticePath& p) { return drop_one(p, line); },
                                        [&](const LatticePath& p) { return raise_one(p, line); });
                                });
                            }
                            if (a >= 1 && validate_query(weak).cls != QueryClass::Invalid) {
                                tally.guarded("lemma_translate", params, [&] {
                                    return check_transform(
                                        "lemma_translate", params, oracle::enumerate_paths(weak),
                                        oracle::enumerate_paths(lemma_translate_target(weak)),
                                        [&](const LatticePath& p) { return lemma_translate(p, line); },
                                        [&](const LatticePath& p) { return lemma_untranslate(p, line); });
                                });
                            }
                            if (validate_query(weak_inv).cls != QueryClass::Invalid) {
                                tally.guarded("reflect_inverse", params, [&] {
                                    return check_transform(
                                        "reflect_inverse", params, oracle::enumerate_paths(weak_inv),
                                        oracle::enumerate_paths(reflect_inverse_target(weak_inv)),
                                        [&](const LatticePath& p) { return reflect_inverse(p, inv); },
                                        [&](const LatticePath& p) {
                                            return unreflect_inverse(p, inv, weak_inv.end());
                                        });
                                });
                            }
                        }
                    }
                }
            }
        }
    }
}

void stepset_family_transforms(Tally& tally, std::int64_t max_steps) {
    using namespace bijections;
    for (std::int64_t p = 1; p <= 3; ++p) {
        for (std::int64_t c = 1; c <= 8; ++c) {
            for (std::int64_t m = 0; m <= max_steps; ++m) {
                for (std::int64_t n = 0; m + n <= max_steps; ++n) {
                    const std::int64_t v = c + p * n - m;
                    const std::vector<std::pair<std::string, std::string>> params{
                        {"p", s(p)}, {"c", s(c)}, {"m", s(m)}, {"n", s(n)}};
                    const oracle::KoroljukFamily family{p, c, m, n};
                    if (v < 1) {
                        // End abscissa m - pn >= c: every path meets x = c.
                        tally.guarded("koroljuk_to_unit", params, [&] {
                            const auto avoiding = oracle::enumerate_stepset(family);
                            return CheckReport{"koroljuk_to_unit", params,
                                               {{"source", s(static_cast<std::int64_t>(avoiding.size()))}},
                                               avoiding.empty()};
                        });
                        continue;
                    }
                    const PathQuery unit_target = koroljuk_target(p, c, m, n);
                    const BoundaryLine& line = unit_target.boundary;
                    const oracle::BohmFamily bohm_family{p, c, v, n};

                    tally.guarded("koroljuk_to_unit", params, [&] {
                        return check_transform(
                            "koroljuk_to_unit", params, oracle::enumerate_stepset(family),
                            oracle::enumerate_paths(unit_target),
                            [&](const LatticePath& x) { return koroljuk_to_unit(x, c); },
                            [&](const LatticePath& x) { return unit_to_koroljuk(x, line, c); });
                    });
                    tally.guarded("unit_to_koroljuk", params, [&] {
                        return check_transform(
                            "unit_to_koroljuk", params, oracle::enumerate_paths(unit_target),
                            oracle::enumerate_stepset(family),
                            [&](const LatticePath& x) { return unit_to_koroljuk(x, line, c); },
                            [&](const LatticePath& x) { return koroljuk_to_unit(x, c); });
                    });
                    tally.guarded("bohm_rotate", params, [&] {
                        return check_transform(
                            "bohm_rotate", params, oracle::enumerate_stepset(family),
                            oracle::enumerate_stepset(bohm_family),
                            [&](const LatticePath& x) { return bohm_rotate(x, c); },
                            [&](const LatticePath& x) { return bohm_unrotate(x, c); });
                    });
                    tally.guarded("bohm_to_unit", params, [&] {
                        return check_transform(
                            "bohm_to_unit", params, oracle::enumerate_stepset(bohm_family),
                            oracle::enumerate_paths(unit_target),
                            [&](const LatticePath& x) { return bohm_to_unit(x); },
                            [&](const LatticePath& x) { return unit_to_bohm(x, line); });
                    });
                    tally.guarded("rotation_composite", params, [&] {
                        std::string problem;
                        for (const auto& x : oracle::enumerate_stepset(family)) {
                            if (!(bohm_to_unit(bohm_rotate(x, c)) == koroljuk_to_unit(x, c))) {
                                problem = "composite differs on " + x.encode();
                                break;
                            }
                        }
                        return CheckReport{"rotation_composite", params,
                                           {{"problem", problem.empty() ? "none" : problem}},
                                           problem.empty()};
                    });
                }
            }
        }
    }
}

}  // namespace

Summary bijection_suite(std::int64_t max_steps) {
    Tally tally("bijections");
    if (max_steps >= 0) {
        unit_family_transforms(tally, max_steps);
        stepset_family_transforms(tally, max_steps);
    }
    return tally.take();
}

}  // namespace latpath::verify
