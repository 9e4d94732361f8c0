#pragma once

#include <cstdint>
#include <vector>

#include "latpath/exactmath.hpp"
#include "latpath/model.hpp"

namespace latpath::oracle {

/// Largest total step count accepted by the explicit enumerators.
inline constexpr std::int64_t kMaxEnumeratedSteps = 24;

/// Unit-step paths from (a,b) to (m,n) whose every point satisfies the
/// boundary, tabulated over the rectangle. b may be negative.
Count dp_count(const PathQuery& q);

/// All such paths, in lexicographic order of their H/V strings.
/// Throws ResourceError beyond kMaxEnumeratedSteps.
std::vector<LatticePath> enumerate_paths(const PathQuery& q);

struct KoroljukFamily {
    std::int64_t p = 1;
    std::int64_t c = 1;
    std::int64_t m = 1;  ///< U = (1,1) steps
    std::int64_t n = 1;  ///< D = (-p,1) steps
};

struct BohmFamily {
    std::int64_t rise = 1;
    std::int64_t start_alt = 1;
    std::int64_t end_alt = 1;
    std::int64_t ups = 0;
};

struct KoroljukCounts {
    Count avoiding;      ///< no visited point has x = c
    Count intersecting;  ///< some visited point has x = c
};

/// Brute force over all C(m+n, n) step sequences.
KoroljukCounts count_stepset(const KoroljukFamily& f);
/// Brute force over all sequences with `ups` rises; counts those never below altitude 1.
Count count_stepset(const BohmFamily& f);

/// The avoiding Koroljuk paths, from (0,0), in U < D lexicographic order.
std::vector<LatticePath> enumerate_stepset(const KoroljukFamily& f);
/// The valid Bohm paths, starting at (0, start_alt), in U < D lexicographic order.
std::vector<LatticePath> enumerate_stepset(const BohmFamily& f);

}  // namespace latpath::oracle
