#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <random>

#include "latscope/pattern.hpp"
#include "latscope/projection.hpp"
#include "test_util.hpp"

using namespace latscope;
using namespace latscope::testutil;

namespace {
constexpr double kPi = 3.14159265358979323846;

// Composite Simpson quadrature, refined until two successive grids agree;
// independent of the closed-form antiderivative used by the library.
std::complex<double> simpson_band(const WaveSum& f,
                                  const std::vector<double>& x, double y0) {
  auto integrand = [&](double y) {
    std::vector<double> p = x;
    p.push_back(y);
    return f.eval(p);
  };
  std::complex<double> prev = 0.0;
  for (int n = 64; n <= 16384; n *= 2) {
    double hh = y0 / n;
    std::complex<double> acc = integrand(0.0) + integrand(y0);
    for (int i = 1; i < n; ++i)
      acc += (i % 2 ? 4.0 : 2.0) * integrand(i * hh);
    std::complex<double> val = acc * (hh / 3.0);
    if (n > 64 && std::abs(val - prev) < 1e-13) return val;
    prev = val;
  }
  return prev;
}
}  // namespace

TEST_CASE("wave sums merge equal frequencies") {
  WaveSum f(2);
  f.add({vec({"1", "0"}), {1.0, 0.0}});
  f.add({vec({"1", "0"}), {0.5, 0.5}});
  f.add({vec({"0", "1"}), {2.0, 0.0}});
  CHECK(f.waves().size() == 2);
  std::complex<double> v = f.eval({0.0, 0.0});
  CHECK(std::abs(v - std::complex<double>(3.5, 0.5)) < 1e-12);
}

TEST_CASE("evaluation matches the defining formula") {
  WaveSum f(1);
  f.add({vec({"1/2"}), {1.0, 0.0}});
  // exp(2 pi i * x/2) at x = 1/2 is exp(i pi / 2) = i.
  std::complex<double> v = f.eval({0.5});
  CHECK(std::abs(v - std::complex<double>(0.0, 1.0)) < 1e-12);
}

TEST_CASE("band projection of a single vertical frequency") {
  // Integral over [0,1] of exp(2 pi i y / 2) dy = (e^{i pi} - 1)/(i pi)
  // = 2i/pi.
  WaveSum f(2);
  f.add({vec({"0", "1/2"}), {1.0, 0.0}});
  WaveSum pf = project_band(f, QF(1));
  REQUIRE(pf.waves().size() == 1);
  std::complex<double> expected(0.0, 2.0 / kPi);
  CHECK(std::abs(pf.waves()[0].coeff - expected) < 1e-12);
  // A flat frequency is scaled by the width.
  WaveSum g(2);
  g.add({vec({"3", "0"}), {1.0, -2.0}});
  WaveSum pg = project_band(g, QF(mpq_class(5, 4)));
  CHECK(std::abs(pg.waves()[0].coeff - std::complex<double>(1.25, -2.5)) <
        1e-12);
}

TEST_CASE("band projection agrees with quadrature on random sums") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_real_distribution<double> pos(-1.5, 1.5);
  for (int trial = 0; trial < 25; ++trial) {
    WaveSum f(3);
    int terms = 1 + trial % 6;
    for (int t = 0; t < terms; ++t) {
      mpq_class k1(num(rng), den(rng)), k2(num(rng), den(rng)),
          k3(num(rng), den(rng));
      k1.canonicalize(); k2.canonicalize(); k3.canonicalize();
      f.add({{QF(k1), QF(k2), QF(k3)}, {coef(rng), coef(rng)}});
    }
    mpq_class y0q(1 + trial % 3, den(rng));
    y0q.canonicalize();
    double y0 = mpq_class(y0q).get_d();
    WaveSum pf = project_band(f, QF(y0q));
    for (int s = 0; s < 3; ++s) {
      std::vector<double> x = {pos(rng), pos(rng)};
      std::complex<double> got = pf.eval(x);
      std::complex<double> want = simpson_band(f, x, y0);
      CHECK(std::abs(got - want) < 1e-9);
    }
  }
}

TEST_CASE("restriction substitutes the height") {
  WaveSum f(2);
  f.add({vec({"1", "1/4"}), {1.0, 0.0}});
  WaveSum rf = restrict_height(f, QF(1));
  REQUIRE(rf.waves().size() == 1);
  // Coefficient picks up exp(2 pi i / 4) = i.
  CHECK(std::abs(rf.waves()[0].coeff - std::complex<double>(0.0, 1.0)) <
        1e-12);
  CHECK(rf.dim() == 1);
}

TEST_CASE("invariant wave averages over the group") {
  // Hexagonal column lattice with the vertical reflection at height 1/4.
  ZModule hexcol =
      mod2({{"1", "0", "0"}, {"1/2", "1/2*r3", "0"}, {"0", "0", "1"}});
  CrystalGroup g = group_with(
      hexcol, {{sigma_matrix(3), vec({"0", "0", "1/4"})}});
  Vec k = vec({"0", "2/3*r3", "1"});  // in the dual: pairs integrally
  WaveSum f = invariant_wave(g, k);
  CHECK(f.waves().size() == 2);
  // The result is invariant under every group element numerically.
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> pos(-1.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    std::vector<double> x = {pos(rng), pos(rng), pos(rng)};
    std::vector<double> gx = {x[0], x[1], -x[2] + 0.25};
    CHECK(std::abs(f.eval(x) - f.eval(gx)) < 1e-10);
    std::vector<double> tx = {x[0] + 1.5, x[1] + 0.5 * std::sqrt(3.0), x[2]};
    CHECK(std::abs(f.eval(x) - f.eval(tx)) < 1e-9);
  }
}

TEST_CASE("invariant wave rejects frequencies outside the dual") {
  ZModule cube = mod2({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}});
  CrystalGroup g = trivial_group(cube);
  CHECK_THROWS(invariant_wave(g, vec({"1/2", "0", "0"})));
  CHECK_NOTHROW(invariant_wave(g, vec({"3", "-2", "1"})));
}

TEST_CASE("projected invariant waves are periodic under the period module") {
  ZModule hexcol =
      mod2({{"1", "0", "0"}, {"1/2", "1/2*r3", "0"}, {"0", "0", "1"}});
  CrystalGroup g = group_with(
      hexcol, {{sigma_matrix(3), vec({"1/2", "0", "1/4"})}});
  Vec k = vec({"0", "2/3*r3", "1"});
  WaveSum f = invariant_wave(g, k);
  for (const char* w : {"1/4", "1/3", "1", "5/4"}) {
    QF y0 = q(w);
    WaveSum pf = project_band(f, y0);
    auto pm = period_module(g, y0);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> pos(-1.0, 1.0);
    for (const Vec& p : pm.module.gens()) {
      double p0 = p[0].to_double(), p1 = p[1].to_double();
      for (int i = 0; i < 10; ++i) {
        std::vector<double> x = {pos(rng), pos(rng)};
        std::vector<double> xp = {x[0] + p0, x[1] + p1};
        CHECK(std::abs(pf.eval(x) - pf.eval(xp)) < 1e-9);
      }
    }
  }
}

TEST_CASE("render samples pixel centers with row zero on top") {
  WaveSum f(2);
  f.add({vec({"0", "1"}), {1.0, 0.0}});
  // Two rows over y in [0,1]: centers y = 0.75 (top row) and y = 0.25.
  Image img = render(f, 0.0, 1.0, 0.0, 1.0, 2, 2);
  REQUIRE(img.px.size() == 4);
  CHECK(img.px[0] == doctest::Approx(std::cos(2 * kPi * 0.75)).epsilon(1e-12));
  CHECK(img.px[2] == doctest::Approx(std::cos(2 * kPi * 0.25)).epsilon(1e-12));
}

TEST_CASE("pgm output") {
  Image img;
  img.width = 3;
  img.height = 1;
  img.px = {-1.0, 0.0, 1.0};
  std::string path = "test_out.pgm";
  write_pgm(img, path);
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::string magic, dims1, dims2, maxval;
  in >> magic >> dims1 >> dims2 >> maxval;
  CHECK(magic == "P5");
  CHECK(dims1 == "3");
  CHECK(dims2 == "1");
  CHECK(maxval == "255");
  in.get();
  unsigned char bytes[3];
  in.read(reinterpret_cast<char*>(bytes), 3);
  CHECK(bytes[0] == 0);
  CHECK(bytes[2] == 255);
  std::remove(path.c_str());

  // Constant images map to mid-gray.
  Image flat;
  flat.width = 2;
  flat.height = 1;
  flat.px = {0.7, 0.7};
  write_pgm(flat, path);
  std::ifstream in2(path, std::ios::binary);
  in2 >> magic >> dims1 >> dims2 >> maxval;
  in2.get();
  unsigned char b2[2];
  in2.read(reinterpret_cast<char*>(b2), 2);
  CHECK(b2[0] == 128);
  CHECK(b2[1] == 128);
  std::remove(path.c_str());
}
