#pragma once

#include <complex>
#include <string>
#include <vector>

#include "latscope/crystal.hpp"

namespace latscope {

/// A plane wave coeff * exp(2*pi*i*<k, x>) with an exact frequency vector.
struct Wave {
  Vec k;
  std::complex<double> coeff;
};

/// Finite trigonometric sum; frequencies are kept unique (adding a wave
/// with an existing frequency merges the coefficients).
class WaveSum {
 public:
  WaveSum() = default;
  explicit WaveSum(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  const std::vector<Wave>& waves() const { return waves_; }
  void add(Wave w);

  std::complex<double> eval(const std::vector<double>& x) const;
  double eval_real(const std::vector<double>& x) const {
    return eval(x).real();
  }

 private:
  int dim_ = 0;
  std::vector<Wave> waves_;
};

/// Average of the wave with frequency k over the group: the sum of
/// exp(-2*pi*i*<delta k, v_delta>) * wave(delta k) over the
/// representatives.  k must lie in the dual lattice, otherwise the result
/// would not be periodic and an exception is thrown.
WaveSum invariant_wave(const CrystalGroup& g, const Vec& k);

/// Integral over the band 0 <= y <= y0 of the last coordinate, leaving a
/// sum in one dimension less.
WaveSum project_band(const WaveSum& f, const QF& y0);

/// Restriction to the slice at height r (substituting y = r).
WaveSum restrict_height(const WaveSum& f, const QF& r);

/// Real part sampled on a pixel grid over [x0, x1] x [y0, y1], sampled at
/// pixel centers, row 0 at the top.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<double> px;  // row-major
};
Image render(const WaveSum& f, double x0, double x1, double y0, double y1,
             int width, int height);

/// Binary PGM with values scaled linearly from [min, max] to [0, 255];
/// a constant image maps to mid-gray.
void write_pgm(const Image& img, const std::string& path);

}  // namespace latscope
