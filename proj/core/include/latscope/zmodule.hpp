#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "latscope/intmat.hpp"
#include "latscope/linalg.hpp"

namespace latscope {

/// Finitely generated Z-module of vectors with QF coordinates, stored with
/// a canonical basis: coordinates are rationalized over the Q-basis
/// {1, sqrt2, sqrt3, sqrt6}, denominators cleared, and the integer matrix
/// put into row Hermite normal form.  Two modules are equal as sets iff
/// their stored bases are identical.
class ZModule {
 public:
  ZModule() = default;
  explicit ZModule(int dim) : dim_(dim) {}
  static ZModule from_generators(const std::vector<Vec>& gens, int dim);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(gens_.size()); }
  const std::vector<Vec>& gens() const { return gens_; }

  friend bool operator==(const ZModule& a, const ZModule& b) {
    return a.dim_ == b.dim_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const ZModule& a, const ZModule& b) {
    return !(a == b);
  }

  /// Integer coordinates of v in the stored basis; empty when v is not a
  /// member.
  std::optional<std::vector<mpz_class>> coordinates(const Vec& v) const;
  bool contains(const Vec& v) const { return coordinates(v).has_value(); }

  /// True when the basis vectors are linearly independent over R.
  bool real_independent() const;
  /// Full rank and R-independent: an honest lattice in R^dim.
  bool is_lattice() const { return rank() == dim_ && real_independent(); }

  /// Dual basis {l*_i} with <l*_i, l_j> = delta_ij; requires is_lattice().
  ZModule dual() const;

  /// l / m for the largest integer m with l/m in the module; requires a
  /// nonzero member l.
  Vec minimal_in_direction(const Vec& l) const;

  /// Horizontal slice R_y = { x : (x, y) in module } as a coset
  /// x0 + R_0; R_0 is returned as a ZModule in dimension dim-1.
  struct Slice;
  Slice slice(const QF& y) const;

  /// Projection dropping the last coordinate, as a canonical ZModule.
  ZModule project() const;

  /// Minimal vertical vector (0,...,0,b), b > 0, if one exists, returned
  /// with its integer coordinates in the stored basis.
  std::optional<std::pair<QF, std::vector<mpz_class>>> minimal_vertical()
      const;

  /// Every member has integer squared length.
  bool is_integral() const;

 private:
  int dim_ = 0;
  std::vector<Vec> gens_;
};

struct ZModule::Slice {
  bool nonempty = false;
  Vec x0;          // representative (zero vector for y = 0)
  ZModule module;  // R_0
};

/// Rationalization over {1, sqrt2, sqrt3, sqrt6}: each vector becomes a row
/// of 4*dim integers after clearing the common denominator, which is
/// returned alongside.
std::pair<ZMat, mpz_class> rationalize(const std::vector<Vec>& vecs, int dim);
Vec derationalize(const ZRow& row, const mpz_class& den, int dim);

}  // namespace latscope
