#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "latpath/identities.hpp"

/// Batch verification runs: closed forms against the oracle, identity grids,
/// randomized identity trials and the bijection suite. Used by `latpath verify`
/// and the acceptance binary.
namespace latpath::verify {

inline constexpr std::uint64_t kDefaultSeed = 7;

struct Summary {
    std::string suite;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::optional<identities::CheckReport> first_failure;

    bool ok() const { return failures == 0; }
    void merge(const Summary& other);
    /// "<suite>: N checks, F failures" plus the first counterexample, if any.
    std::string to_text() const;
    nlohmann::json to_json() const;
};

struct SweepConfig {
    std::int64_t max_k = 3;
    std::int64_t r_min = -2;
    std::int64_t r_max = 4;
    std::int64_t max_m = 6;  ///< inclusive; negative means an empty grid
    std::int64_t max_n = 8;
};

/// Worker count: LATPATH_THREADS if set and positive, else hardware concurrency.
unsigned worker_threads();

/// Every boundary-valid query over both slope kinds and strictness modes:
/// closed form == dp_count.
Summary oracle_sweep(const SweepConfig& cfg);
/// Strict-to-weak shift identity and the start-point recurrence on the grid.
Summary shift_and_recurrence_sweep(const SweepConfig& cfg);

/// koroljuk_literal == koroljuk_reduced for p <= max_p, c <= max_c, m <= max_m, n <= max_n.
Summary koroljuk_forms(std::int64_t max_p, std::int64_t max_c, std::int64_t max_m, std::int64_t max_n);
/// complement_check on the same grid; the avoiding term is also brute-forced
/// whenever m + n <= stepset_limit.
Summary complement_grid(std::int64_t max_p, std::int64_t max_c, std::int64_t max_m,
                        std::int64_t max_n, std::int64_t stepset_limit);

/// Random rational (alpha, beta, gamma) with numerators/denominators in [-6, 6], n <= 12.
Summary hagen_rothe_trials(std::size_t trials, std::uint64_t seed);
/// Random rational x (same range), 0 <= k <= 12.
Summary upper_negation_trials(std::size_t trials, std::uint64_t seed);

/// niederhausen == count_strict(k, kd, 0, 0, m, n) (plus the substituted form),
/// k <= max_k, m, n <= max_mn, every integral kd in range of the stated domain.
Summary niederhausen_grid(std::int64_t max_k, std::int64_t max_mn);
/// bohm == count_strict under the rotation correspondence == brute force.
Summary bohm_grid(std::int64_t max_rise, std::int64_t max_alt, std::int64_t max_ups);

/// For each listed non-integer r: oracle counts under r equal those under the
/// normalized line, and count_paths matches them. When the line is off-lattice
/// the strict count must also equal the normalized weak count.
Summary non_integer_intercepts(std::size_t how_many);

/// Image-in-target, injectivity, equal cardinality and round-trip identity for
/// every transform on all source instances with at most `max_steps` steps.
Summary bijection_suite(std::int64_t max_steps);

}  // namespace latpath::verify
