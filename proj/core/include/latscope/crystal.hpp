#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latscope/zmodule.hpp"

namespace latscope {

/// One non-translation generator of a crystallographic group, acting as
/// x -> delta * x + v.  The full group is generated by these together with
/// the lattice translations.
struct OrthoElem {
  Mat delta;
  Vec v;
};

/// Crystallographic group given by its lattice and one representative
/// (v, delta) per point-group element delta.
class CrystalGroup {
 public:
  CrystalGroup() = default;

  /// Translation parts are reduced into the fundamental cell of L.
  static CrystalGroup make(const ZModule& L, std::vector<OrthoElem> reps);

  const ZModule& lattice() const { return lattice_; }
  const std::vector<OrthoElem>& reps() const { return reps_; }
  int dim() const { return lattice_.dim(); }

  /// Consistency problems, empty when the data describes a group: the
  /// lattice must be full rank, each delta orthogonal and
  /// lattice-preserving, deltas distinct, the identity represented by a
  /// lattice translation, and composition closed modulo translations.
  std::vector<std::string> validate() const;

  std::optional<OrthoElem> find_rep(const Mat& delta) const;
  /// The affine map x -> delta * x + v belongs to the group.
  bool contains(const Mat& delta, const Vec& v) const;

  /// Data of the vertical reflection if it belongs to the point group:
  /// translation split as (v1, y1), with y1 reduced modulo the minimal
  /// vertical period of the lattice when one exists.
  struct SigmaData {
    bool in_j = false;
    Vec v1;
    QF y1;
  };
  SigmaData sigma_data() const;

 private:
  ZModule lattice_;
  std::vector<OrthoElem> reps_;
};

/// diag(1, ..., 1, -1): reflection on the last coordinate.
Mat sigma_matrix(int dim);

/// Block matrix diag(alpha, sign) acting on one more coordinate.
Mat lift_block(const Mat& alpha, int sign);

/// v minus its integer part in the basis of L (componentwise floor of the
/// basis coordinates).  Requires is_lattice().
Vec reduce_mod_lattice(const ZModule& L, const Vec& v);

/// A worked family of three-dimensional crystallographic groups whose
/// projections land on (sub/super)lattices of the standard hexagonal
/// lattice, one entry per structural case, vertical period 1 and
/// reflection height 1/4 where a vertical reflection is present.
struct CatalogEntry {
  std::string id;
  CrystalGroup group;
  Vec v1;  // empty when the point group is trivial
};
std::vector<CatalogEntry> hex_catalog();

}  // namespace latscope
