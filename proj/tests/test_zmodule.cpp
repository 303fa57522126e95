#include <doctest.h>

#include <algorithm>
#include <random>

#include "latscope/intmat.hpp"
#include "latscope/zmodule.hpp"
#include "test_util.hpp"

using namespace latscope;
using namespace latscope::testutil;

namespace {
std::mt19937_64 rng(987654321);

QF rand_small_qf() {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> which(0, 3);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  switch (which(rng)) {
    case 0: return QF(q);
    case 1: return QF(q) * QF::sqrt2();
    case 2: return QF(q) * QF::sqrt3();
    default: return QF(q) * QF::sqrt6();
  }
}

std::vector<Vec> rand_gens(int count, int dim) {
  std::vector<Vec> gens;
  for (int i = 0; i < count; ++i) {
    Vec v;
    for (int j = 0; j < dim; ++j) v.push_back(rand_small_qf());
    gens.push_back(std::move(v));
  }
  return gens;
}
}  // namespace

TEST_CASE("canonical basis is independent of the generator presentation") {
  for (int trial = 0; trial < 100; ++trial) {
    auto gens = rand_gens(3, 2);
    ZModule m = ZModule::from_generators(gens, 2);
    // Shuffle, add redundant combinations, negate: same module.
    std::vector<Vec> noisy = gens;
    noisy.push_back(vadd(gens[0], gens[1]));
    noisy.push_back(vneg(gens[2]));
    noisy.push_back(vsub(vadd(gens[1], gens[1]), gens[2]));
    std::shuffle(noisy.begin(), noisy.end(), rng);
    CHECK(ZModule::from_generators(noisy, 2) == m);
    // Re-canonicalizing the stored basis is the identity.
    CHECK(ZModule::from_generators(m.gens(), 2) == m);
  }
}

TEST_CASE("membership and coordinates") {
  ZModule l = l54();
  CHECK(l.contains(vec({"5", "4"})));
  CHECK(l.contains(vec({"0", "7"})));
  CHECK(l.contains(vec({"5", "-3"})));
  CHECK(l.contains(vec({"0", "0"})));
  CHECK(!l.contains(vec({"1", "0"})));
  CHECK(!l.contains(vec({"5", "4 + 1/2"})));
  CHECK(!l.contains(vec({"5/2", "2"})));

  // coordinates reproduce the vector from the stored basis.
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> coef(-6, 6);
    Vec v = vadd(vscale(QF(coef(rng)), vec({"5", "4"})),
                 vscale(QF(coef(rng)), vec({"0", "7"})));
    auto co = l.coordinates(v);
    REQUIRE(co.has_value());
    Vec rebuilt(2, QF(0));
    for (size_t i = 0; i < co->size(); ++i)
      rebuilt = vadd(rebuilt, vscale(QF((*co)[i]), l.gens()[i]));
    CHECK(rebuilt == v);
  }
}

TEST_CASE("membership with irrational coordinates") {
  ZModule m = mod2({{"1", "0"}, {"1/2*r2", "0"}, {"0", "1/3*r3"}});
  CHECK(m.rank() == 3);
  CHECK(m.contains(vec({"2 + 3/2*r2", "r3"})));
  CHECK(!m.contains(vec({"1/2", "0"})));
  CHECK(!m.contains(vec({"r3", "0"})));
  CHECK(!m.real_independent());
  CHECK(!m.is_lattice());
}

TEST_CASE("dual of the dual returns the lattice") {
  for (int trial = 0; trial < 60; ++trial) {
    auto gens = rand_gens(2, 2);
    ZModule m = ZModule::from_generators(gens, 2);
    if (!m.is_lattice()) continue;
    ZModule d = m.dual();
    CHECK(d.is_lattice());
    CHECK(d.dual() == m);
    // Defining property: integer pairings both ways.
    for (const Vec& x : m.gens())
      for (const Vec& y : d.gens()) {
        QF p = dot(x, y);
        CHECK(p.is_rational());
        CHECK(p.to_rational().get_den() == 1);
      }
  }
}

TEST_CASE("dual of the integer lattice scaled") {
  ZModule m = mod2({{"2", "0"}, {"0", "3"}});
  CHECK(m.dual() == mod2({{"1/2", "0"}, {"0", "1/3"}}));
}

TEST_CASE("minimal vector in a direction") {
  ZModule l = l54();
  // (0,7) is already minimal vertical; (0,14) divides down to it.
  CHECK(l.minimal_in_direction(vec({"0", "14"})) == vec({"0", "7"}));
  CHECK(l.minimal_in_direction(vec({"5", "4"})) == vec({"5", "4"}));
  CHECK(l.minimal_in_direction(vec({"10", "8"})) == vec({"5", "4"}));
  CHECK(l.minimal_in_direction(vec({"15", "-9"})) == vec({"5", "-3"}));
}

TEST_CASE("minimal vertical vector") {
  auto mv = l54().minimal_vertical();
  REQUIRE(mv.has_value());
  CHECK(mv->first == QF(7));
  CHECK(!lt().minimal_vertical().has_value());
  // The irrational horizontal offset on the third generator rules out any
  // vertical vector here too.
  CHECK(!ls().minimal_vertical().has_value());
  auto mv3 = mod2({{"1", "0", "0"}, {"0", "1", "0"}, {"1/2", "0", "3/2"}})
                 .minimal_vertical();
  REQUIRE(mv3.has_value());
  CHECK(mv3->first == QF(3));
}

TEST_CASE("slices of the running example") {
  ZModule l = l54();
  // R_0: 5m + 0n with heights 4m + 7n = 0 forces m = 7t, n = -4t: 35 Z.
  auto s0 = l.slice(QF(0));
  CHECK(s0.nonempty);
  CHECK(s0.module == mod2({{"35"}}));
  // Height 4 is realised by (5,4): coset 5 + 35 Z.
  auto s4 = l.slice(QF(4));
  CHECK(s4.nonempty);
  CHECK(s4.module == mod2({{"35"}}));
  QF diff = s4.x0[0] - QF(5);
  CHECK(s4.module.contains({diff}));
  // Height 1/2 is never attained.
  CHECK(!l.slice(QF(mpq_class(1, 2))).nonempty);
  // Height 1 = 2*4 - 7 is attained at x = 10.
  auto s1 = l.slice(QF(1));
  CHECK(s1.nonempty);
  CHECK(s1.module.contains({s1.x0[0] - QF(10)}));
}

TEST_CASE("level-zero slice of the skew hexagonal lattice") {
  // Heights come from the third generator only, so R_0 is spanned by the
  // first two generators: the hexagonal lattice.
  auto s0 = lt().slice(QF(0));
  CHECK(s0.nonempty);
  CHECK(s0.module == mod2({{"1", "0"}, {"1/2", "1/2*r3"}}));
}

TEST_CASE("slice membership matches direct membership") {
  for (int trial = 0; trial < 40; ++trial) {
    auto gens = rand_gens(3, 3);
    ZModule m = ZModule::from_generators(gens, 3);
    if (!m.is_lattice()) continue;
    std::uniform_int_distribution<int> coef(-3, 3);
    Vec v = Vec(3, QF(0));
    for (const Vec& g : gens) v = vadd(v, vscale(QF(coef(rng)), g));
    auto s = m.slice(v[2]);
    REQUIRE(s.nonempty);
    Vec horiz = {v[0], v[1]};
    CHECK(s.module.contains(vsub(horiz, s.x0)));
  }
}

TEST_CASE("projection drops the last coordinate") {
  CHECK(l54().project() == mod2({{"5"}}));
  // The skew generator contributes (1,1), which is independent of the
  // hexagonal plane lattice over Z.
  ZModule plt = lt().project();
  CHECK(plt.rank() == 3);
  CHECK(plt.contains(vec({"1", "1"})));
  CHECK(plt.contains(vec({"1/2", "1/2*r3"})));
  // The projection of the offset lattice picks up the irrational shift.
  ZModule p = ls().project();
  CHECK(p.rank() == 3);
  CHECK(p.contains(vec({"1/2*r2", "0"})));
}

TEST_CASE("integrality check") {
  CHECK(mod2({{"1", "0"}, {"0", "1"}}).is_integral());
  CHECK(mod2({{"1", "1"}, {"0", "2"}}).is_integral());
  CHECK(!mod2({{"1/2", "0"}, {"0", "1"}}).is_integral());
  // Hexagonal members have squared length m^2 + mn + n^2: integral.
  CHECK(mod2({{"1", "0"}, {"1/2", "1/2*r3"}}).is_integral());
  CHECK(!mod2({{"1", "0"}, {"0", "1/2*r3"}}).is_integral());
  CHECK(mod2({{"r2", "0"}, {"0", "r2"}}).is_integral());
}

namespace {
ZMat zmul(const ZMat& a, const ZMat& b) {
  ZMat r(a.size(), ZRow(b.empty() ? 0 : b[0].size(), 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k)
      for (size_t j = 0; j < b[k].size(); ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}
}  // namespace

TEST_CASE("hermite form invariants of random integer matrices") {
  std::uniform_int_distribution<int> e(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    ZMat a(3, ZRow(4));
    for (auto& row : a)
      for (auto& x : row) x = e(rng);
    Hnf h = row_hnf(a);
    // u * a equals the reported form.
    CHECK(zmul(h.u, a) == h.h);
    // u is unimodular: its own Hermite form is the identity.
    Hnf hu = row_hnf(h.u);
    CHECK(hu.rank == static_cast<int>(h.u.size()));
    for (size_t i = 0; i < hu.h.size(); ++i)
      for (size_t j = 0; j < hu.h[i].size(); ++j)
        CHECK(hu.h[i][j] == (i == j ? 1 : 0));
    // Echelon shape: pivot columns strictly increase, rows after rank are 0.
    for (int i = 0; i + 1 < h.rank; ++i)
      CHECK(h.pivot_cols[i] < h.pivot_cols[i + 1]);
    for (size_t i = h.rank; i < h.h.size(); ++i)
      for (const auto& x : h.h[i]) CHECK(x == 0);
  }
}

TEST_CASE("integer left solve and kernel") {
  ZMat a = {{2, 0, 4}, {0, 3, 6}};
  auto x = solve_left(a, {4, 3, 14});
  REQUIRE(x.has_value());
  CHECK(zmul({*x}, a) == ZMat{{4, 3, 14}});
  CHECK(!solve_left(a, {1, 0, 0}).has_value());

  ZMat b = {{2, 4}, {1, 2}, {3, 6}};
  ZMat ker = left_kernel(b);
  CHECK(ker.size() == 2);
  for (const auto& row : ker) {
    ZMat prod = zmul({row}, b);
    for (const auto& v : prod[0]) CHECK(v == 0);
  }
}

TEST_CASE("unimodular completion of a primitive row") {
  ZRow r = {6, 10, 15};
  ZMat u = unimodular_with_first_row(r);
  CHECK(u[0] == r);
  Hnf hu = row_hnf(u);
  CHECK(hu.rank == 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) CHECK(hu.h[i][j] == (i == j ? 1 : 0));
  CHECK_THROWS(unimodular_with_first_row({2, 4, 6}));
}

TEST_CASE("rationalization round-trips") {
  std::vector<Vec> vs = {vec({"1/2", "1/3*r2"}), vec({"-2 + r6", "5/7*r3"})};
  auto [mat, den] = rationalize(vs, 2);
  REQUIRE(mat.size() == 2);
  for (size_t i = 0; i < vs.size(); ++i)
    CHECK(derationalize(mat[i], den, 2) == vs[i]);
}
