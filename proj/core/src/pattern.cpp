#include "latscope/pattern.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace latscope {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> unit_phase(double turns) {
  return std::polar(1.0, kTwoPi * turns);
}

}  // namespace

void WaveSum::add(Wave w) {
  if (static_cast<int>(w.k.size()) != dim_)
    throw std::invalid_argument("WaveSum::add: dimension mismatch");
  for (auto& existing : waves_) {
    if (existing.k == w.k) {
      existing.coeff += w.coeff;
      return;
    }
  }
  waves_.push_back(std::move(w));
}

std::complex<double> WaveSum::eval(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("WaveSum::eval: dimension mismatch");
  std::complex<double> s = 0.0;
  for (const auto& w : waves_) {
    double phase = 0.0;
    for (int i = 0; i < dim_; ++i) phase += w.k[i].to_double() * x[i];
    s += w.coeff * unit_phase(phase);
  }
  return s;
}

WaveSum invariant_wave(const CrystalGroup& g, const Vec& k) {
  if (!g.lattice().dual().contains(k))
    throw std::invalid_argument(
        "invariant_wave: frequency is not in the dual lattice");
  WaveSum out(g.dim());
  for (const auto& rep : g.reps()) {
    Vec kk = mat_vec(rep.delta, k);
    QF t = dot(kk, rep.v);
    out.add({std::move(kk), unit_phase(-t.to_double())});
  }
  return out;
}

WaveSum project_band(const WaveSum& f, const QF& y0) {
  WaveSum out(f.dim() - 1);
  const double w = y0.to_double();
  for (const auto& wave : f.waves()) {
    const QF& ky = wave.k.back();
    std::complex<double> factor;
    if (ky.is_zero()) {
      factor = w;
    } else {
      const double kyd = ky.to_double();
      factor = (unit_phase(kyd * w) - 1.0) /
               std::complex<double>(0.0, kTwoPi * kyd);
    }
    out.add({Vec(wave.k.begin(), wave.k.end() - 1), wave.coeff * factor});
  }
  return out;
}

WaveSum restrict_height(const WaveSum& f, const QF& r) {
  WaveSum out(f.dim() - 1);
  const double h = r.to_double();
  for (const auto& wave : f.waves()) {
    std::complex<double> factor = unit_phase(wave.k.back().to_double() * h);
    out.add({Vec(wave.k.begin(), wave.k.end() - 1), wave.coeff * factor});
  }
  return out;
}

Image render(const WaveSum& f, double x0, double x1, double y0, double y1,
             int width, int height) {
  if (f.dim() != 2)
    throw std::invalid_argument("render: need a two-dimensional sum");
  if (width <= 0 || height <= 0)
    throw std::invalid_argument("render: empty image");
  Image img;
  img.width = width;
  img.height = height;
  img.px.resize(static_cast<size_t>(width) * height);
  const double dx = (x1 - x0) / width;
  const double dy = (y1 - y0) / height;
  for (int row = 0; row < height; ++row) {
    const double y = y1 - (row + 0.5) * dy;  // top row first
    for (int col = 0; col < width; ++col) {
      const double x = x0 + (col + 0.5) * dx;
      img.px[static_cast<size_t>(row) * width + col] = f.eval_real({x, y});
    }
  }
  return img;
}

void write_pgm(const Image& img, const std::string& path) {
  double lo = img.px.empty() ? 0.0 : img.px[0];
  double hi = lo;
  for (double v : img.px) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_pgm: cannot open " + path);
  out << "P5\n" << img.width << " " << img.height << "\n255\n";
  const double span = hi - lo;
  for (double v : img.px) {
    int byte = span > 1e-12 ? static_cast<int>(std::lround((v - lo) / span * 255.0))
                            : 128;
    byte = std::max(0, std::min(255, byte));
    out.put(static_cast<char>(byte));
  }
  if (!out) throw std::runtime_error("write_pgm: write failed for " + path);
}

}  // namespace latscope
