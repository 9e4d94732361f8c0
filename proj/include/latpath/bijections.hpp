#pragma once

#include <cstdint>

#include "latpath/model.hpp"

/// Path correspondences behind the counting formulas. Every map validates that
/// its input belongs to the declared source family (ValidationError otherwise)
/// and has an explicit inverse. The `*_target` helpers give the family the
/// image lands in, so callers can enumerate both sides.
namespace latpath::bijections {

/// Strictly above y = kx - r  ->  weakly above, one unit lower (start and end).
/// `line` must be an integer-slope line with integral r.
LatticePath drop_one(const LatticePath& path, const BoundaryLine& line);
LatticePath raise_one(const LatticePath& path, const BoundaryLine& line);
PathQuery drop_one_target(const PathQuery& source);

/// L(a+1, b; m, n) -> L(a, b-k; m-1, n-k): translate by (-1, -k).
LatticePath lemma_translate(const LatticePath& path, const BoundaryLine& line);
LatticePath lemma_untranslate(const LatticePath& path, const BoundaryLine& line);
PathQuery lemma_translate_target(const PathQuery& source);

/// Weakly above y = x/k - r (kr integral), from (a,b) to (m,n)  ->  weakly above
/// y = kx from (0, k(n+r)-m) to (n-b, k(n+r)-a). Reverses the step order and
/// swaps H with V.
LatticePath reflect_inverse(const LatticePath& path, const BoundaryLine& line);
/// Inverse of reflect_inverse; `original_end` is the (m,n) of the source family.
LatticePath unreflect_inverse(const LatticePath& path, const BoundaryLine& line, Point original_end);
PathQuery reflect_inverse_target(const PathQuery& source);

/// Koroljuk(p) path from (0,0) that never visits x = c, with m U-steps and n
/// D-steps  ->  unit path strictly above y = px - v, v = c + pn - m, from (0,0)
/// to (n,m). Reverses the step order, U -> V, D -> H.
LatticePath koroljuk_to_unit(const LatticePath& path, std::int64_t c);
/// Inverse of koroljuk_to_unit. `line` must be y = px - v with v = c + pn - m.
LatticePath unit_to_koroljuk(const LatticePath& path, const BoundaryLine& line, std::int64_t c);
/// The strict unit-path family koroljuk_to_unit lands in.
PathQuery koroljuk_target(std::int64_t p, std::int64_t c, std::int64_t m, std::int64_t n);

/// Koroljuk(p) path avoiding x = c  ->  Bohm(rise = p) path, pointwise
/// (x, y) -> (y, c - x). Starts at altitude c, ends at c + pn - m, stays >= 1.
LatticePath bohm_rotate(const LatticePath& path, std::int64_t c);
LatticePath bohm_unrotate(const LatticePath& path, std::int64_t c);

/// Bohm path from altitude M to altitude K with `a` rises, never below 1  ->
/// unit path strictly above y = rise*x - K from (0,0) to (a, M + rise*a - K).
/// Reverses the step order, U -> H, D -> V.
LatticePath bohm_to_unit(const LatticePath& path);
/// Inverse of bohm_to_unit; `line` is y = rise*x - K.
LatticePath unit_to_bohm(const LatticePath& path, const BoundaryLine& line);

}  // namespace latpath::bijections
