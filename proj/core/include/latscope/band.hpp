#pragma once

#include <utility>
#include <vector>

#include "latscope/zmodule.hpp"

namespace latscope {

/// Generators of a lattice in R^{n+1} aligned to its minimal vertical
/// vector (0, b0) and to a requested horizontal target: the full basis is
/// {(0, b0)} followed by the listed (a_i, b_i) with 0 <= b_i < b0, the a_i
/// linearly independent over R, and m_star * a_1 equal to the target's
/// horizontal part.
struct AdaptedBasis {
  QF b0;
  std::vector<std::pair<Vec, QF>> pairs;
  mpz_class m_star;
};

/// Requires: L a full-rank lattice containing a vertical vector, and
/// target in L with nonzero horizontal part.
AdaptedBasis adapted_generators(const ZModule& L, const Vec& target);

/// True iff p is a period of the projected band P(L cap B_y0).
bool band_period_check(const ZModule& L, const QF& y0, const Vec& p);

enum class PropCase { None, CaseI, CaseII, CaseIII };

/// Which sufficient condition applies: I: (p,0) in L; II: p in P(L) and a
/// vertical (0,b) with 0 < b <= y0; III: the vertical reflection preserves
/// L and p has a lift (p,q) with 0 < q <= y0.
PropCase prop_latt_check(const ZModule& L, const QF& y0, const Vec& p);

/// The vertical reflection (negating the last coordinate) maps L onto L.
bool sigma_preserves(const ZModule& L);

}  // namespace latscope
