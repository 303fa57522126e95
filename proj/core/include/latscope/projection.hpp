#pragma once

#include <string>
#include <vector>

#include "latscope/crystal.hpp"

namespace latscope {

/// Whether a candidate planar symmetry x -> alpha * x + v is shared by
/// every projected (or restricted) pattern, with the clause that grants
/// it: "a" translation-lift, "b" reflected lift at the far wall, "c"/"d"
/// lifts at arbitrary height when the band width is itself a period.
struct ProjSym {
  bool holds = false;
  std::string clause;
};

ProjSym proj_symmetry(const CrystalGroup& g, const QF& y0, const Mat& alpha,
                      const Vec& v);
/// Symmetries of the restriction to a slab of half-width r ("a"/"b" only).
ProjSym restr_symmetry(const CrystalGroup& g, const QF& r, const Mat& alpha,
                       const Vec& v);

/// Common periods of all patterns projected from a band of width y0, and
/// how they were obtained: "width-in-lattice" when (0, y0) is itself a
/// lattice vector (project everything), "width-outside-lattice" otherwise
/// (level-zero slice plus at most one extra translation coming from the
/// vertical reflection).
struct PeriodModule {
  ZModule module;
  std::string derivation;
};
PeriodModule period_module(const CrystalGroup& g, const QF& y0);

/// A point-group element of the projected pattern together with the
/// translation parts it can carry (one per lift that realises it).
struct ProjElem {
  Mat alpha;
  std::vector<Vec> v_candidates;
};

/// Point group data of the projected patterns: j0 collects every alpha
/// whose lift (with either vertical sign) belongs to the point group of g;
/// jtilde is the subgroup actually realised at width y0.
struct PointGroupProjected {
  std::vector<Mat> j0;
  std::vector<ProjElem> jtilde;
};
PointGroupProjected point_group_projected(const CrystalGroup& g, const QF& y0);

/// Symmetry group of the restrictions to the slab of half-width r.
struct RestrictionGroup {
  ZModule lhat;
  std::vector<ProjElem> jhat;
};
RestrictionGroup restriction_group(const CrystalGroup& g, const QF& r);

}  // namespace latscope
