#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latscope/crystal.hpp"
#include "latscope/projection.hpp"

namespace latscope {

/// Structure of a three-dimensional lattice relative to its vertical
/// direction: generators arranged as (a_hat, a3), (b_hat, b3), (0, 0, c)
/// with c > 0 minimal vertical and a3, b3 in [0, c), together with the
/// integer-pair module D = {(m, n) : m*a3 + n*b3 = 0 (mod c)} that
/// controls the level-zero slice R_0 = {m*a_hat + n*b_hat : (m, n) in D}.
struct VerticalForm {
  QF c, a3, b3;
  Vec a_hat, b_hat;
  ZModule d;         // submodule of Z^2, stored with QF integer entries
  bool sigma_in_l = false;  // the vertical reflection maps L into L
};

/// From an explicit generator triple (a, b, vertical); heights are reduced
/// into [0, c) but the horizontal parts are kept as given.
VerticalForm vertical_form(const Vec& a, const Vec& b, const Vec& vert);
/// From the canonical basis of L, choosing the completion of the minimal
/// vertical vector deterministically.  Requires a vertical vector.
VerticalForm vertical_form(const ZModule& L);

/// R_0 rebuilt from the D-module description; must agree with
/// L.slice(0).module.
ZModule r0_from_form(const VerticalForm& f);

/// Width classes relative to the vertical period c and the reflection
/// height y1: 'A' for multiples of c, 'B' for y1 (mod c), 'C' for
/// y1 + c/2 (mod c), 'O' otherwise.  Without y1 only 'A'/'O' occur.
char width_class(const QF& y0, const QF& c, const std::optional<QF>& y1);

/// Which structural case a crystallographic group falls into, relative to
/// a target planar lattice M that its projections are expected to reach:
/// "1" (no vertical vector), "2.1"/"2.2" (vertical reflection does not
/// preserve L), "3.1"-"3.3" (it preserves L but contributes no extra
/// translation), "4.1"-"4.3" (flat generators plus a genuine reflection
/// translation), "5.1"-"5.5" (one generator at half height).  Throws with
/// a diagnostic when the group cannot project onto M.
///
/// The label is canonical over the holohedry of M: every orientation of
/// the group is classified and the smallest label wins, so equivalent
/// groups always agree.  When M has a rich holohedry the paired
/// descriptions 4.2/4.3 and 5.3/5.4 can describe the same group in two
/// orientations; such groups get the smaller label of the pair.
struct CaseLabel {
  std::string id;
  QF c, a3, b3;
  Vec a_hat, b_hat;
  Vec v1;  // empty unless the reflection carries a translation
  QF y1;
};
CaseLabel classify_case(const CrystalGroup& g, const ZModule& m);

/// Projected period modules of a catalog-convention group (vertical
/// period 1, reflection height 1/4) on the four width classes, each
/// computed at two representative widths and checked for agreement.
struct HexProfile {
  ZModule a, b, c, o;
};
HexProfile hex_profile(const CrystalGroup& g);

/// Human name for the planar lattices that recur in the hexagonal family
/// ("H", "rec I", "R_{pi/3} rec I", ..., optionally scaled by 1/2 or 2);
/// falls back to listing the canonical generators.
std::string lattice_name(const ZModule& m);

/// The standard hexagonal lattice {(1,0), (1/2, sqrt3/2)}.
ZModule hex_lattice();

/// Expected projected-lattice profile for one hex_catalog() column,
/// embedded as reference data; same order and keying (id, v1) as the
/// catalog.
struct HexFixture {
  std::string id;
  Vec v1;  // empty when the point group is trivial
  ZModule a, b, c, o;
};
std::vector<HexFixture> hex_fixtures();

}  // namespace latscope
