#include <doctest.h>

#include "latscope/classify.hpp"
#include "latscope/holohedry.hpp"
#include "test_util.hpp"

using namespace latscope;
using namespace latscope::testutil;

namespace {
// 4.3 and 5.4 describe the same configurations as 4.2 and 5.3 written in a
// different generator pair of the target lattice, so the canonical
// classifier reports the smaller label of each pair.
std::string canon(const std::string& id) {
  if (id == "4.3") return "4.2";
  if (id == "5.4") return "5.3";
  return id;
}
}  // namespace

TEST_CASE("vertical form of the rhombohedral-style lattice") {
  Vec a = vec({"1", "0", "1"});
  Vec b = vec({"-1/2", "-1/2*r3", "1"});
  Vec c = vec({"0", "0", "3"});
  VerticalForm f = vertical_form(a, b, c);
  CHECK(f.c == QF(3));
  CHECK(f.a3 == QF(1));
  CHECK(f.b3 == QF(1));
  // Height relation m + n = 0 (mod 3) is generated by (2,1) and (1,2).
  CHECK(f.d == mod2({{"2", "1"}, {"1", "2"}}));
  // R_0 from the pair module agrees with the direct slice.
  ZModule l = ZModule::from_generators({a, b, c}, 3);
  CHECK(r0_from_form(f) == l.slice(QF(0)).module);
  // The slice is the triangular lattice spanned by (3/2, +-sqrt3/2).
  CHECK(r0_from_form(f) == mod2({{"3/2", "1/2*r3"}, {"3/2", "-1/2*r3"}}));
  // The projection is the hexagonal lattice.
  CHECK(l.project() == hex_lattice());
}

TEST_CASE("vertical form of the three cubic-style lattices") {
  struct Row {
    const char* b3;
    const char* c;
  };
  // Same D-module for the primitive, body-centered and face-centered
  // columns: n = 0 (mod 3).
  for (const Row& r : {Row{"-1/6*r6", "1/2*r6"}, Row{"-1/12*r6", "1/4*r6"},
                       Row{"1/3*r6", "r6"}}) {
    INFO(r.b3, " ", r.c);
    Vec a = vec({"1", "0", "0"});
    Vec b = {q("1/2"), q("1/6*r3"), q(r.b3)};
    Vec c = {QF(0), QF(0), q(r.c)};
    VerticalForm f = vertical_form(a, b, c);
    CHECK(f.d == mod2({{"0", "3"}, {"1", "3"}}));
    ZModule l = ZModule::from_generators({a, b, c}, 3);
    CHECK(r0_from_form(f) == l.slice(QF(0)).module);
    // Only every third multiple of the slanted generator returns to level
    // zero, which enlarges the triangles into the hexagonal lattice.
    CHECK(l.slice(QF(0)).module == hex_lattice());
    CHECK(l.project() == mod2({{"1/2", "1/6*r3"}, {"1/2", "-1/6*r3"},
                               {"1", "0"}}));
  }
}

TEST_CASE("vertical form from a module picks the minimal vertical") {
  VerticalForm f = vertical_form(
      mod2({{"1", "0", "1/2"}, {"0", "1", "0"}, {"0", "0", "1"}}));
  CHECK(f.c == QF(1));
  CHECK((f.a3 == QF(mpq_class(1, 2)) || f.b3 == QF(mpq_class(1, 2))));
  CHECK(f.sigma_in_l);
}

TEST_CASE("width classes") {
  QF c(1);
  std::optional<QF> y1 = QF(mpq_class(1, 4));
  CHECK(width_class(QF(1), c, y1) == 'A');
  CHECK(width_class(QF(2), c, y1) == 'A');
  CHECK(width_class(q("1/4"), c, y1) == 'B');
  CHECK(width_class(q("5/4"), c, y1) == 'B');
  CHECK(width_class(q("3/4"), c, y1) == 'C');
  CHECK(width_class(q("7/4"), c, y1) == 'C');
  CHECK(width_class(q("1/3"), c, y1) == 'O');
  CHECK(width_class(QF::sqrt2() / QF(14), c, y1) == 'O');
  // Without a reflection height only A and O occur.
  CHECK(width_class(q("1/4"), c, std::nullopt) == 'O');
  CHECK(width_class(QF(3), c, std::nullopt) == 'A');
}

TEST_CASE("catalog entries classify to their canonical labels") {
  ZModule hex = hex_lattice();
  for (const auto& e : hex_catalog()) {
    INFO(e.id);
    CaseLabel label = classify_case(e.group, hex);
    CHECK(label.id == canon(e.id));
  }
}

TEST_CASE("classification is invariant under reorienting the group") {
  ZModule hex = hex_lattice();
  auto cat = hex_catalog();
  // Rotate a few representative entries by each holohedry element of the
  // target and check the label does not move.
  for (size_t idx : {size_t(0), size_t(7), size_t(12), size_t(16),
                     size_t(20)}) {
    const auto& e = cat[idx];
    std::string base = classify_case(e.group, hex).id;
    for (const Mat& alpha : holohedry(hex)) {
      Mat lifted = lift_block(alpha, 1);
      std::vector<Vec> gens;
      for (const Vec& g : e.group.lattice().gens())
        gens.push_back(mat_vec(lifted, g));
      ZModule turned = ZModule::from_generators(gens, 3);
      std::vector<OrthoElem> reps;
      for (const auto& r : e.group.reps()) {
        // Conjugate the representative by the lifted rotation.
        reps.push_back({mat_mul(lifted, mat_mul(r.delta, transpose(lifted))),
                        mat_vec(lifted, r.v)});
      }
      CrystalGroup turned_g = CrystalGroup::make(turned, reps);
      REQUIRE(turned_g.validate().empty());
      CHECK(classify_case(turned_g, hex).id == base);
    }
  }
}

TEST_CASE("lattice without a vertical vector is case 1") {
  CHECK(classify_case(trivial_group(lt()), hex_lattice()).id == "1");
}

TEST_CASE("rhombohedral-style lattice against its two natural targets") {
  ZModule l = mod2({{"1", "0", "1"}, {"-1/2", "-1/2*r3", "1"}, {"0", "0", "3"}});
  CrystalGroup g = trivial_group(l);
  // Against the full projection (hexagonal): proper sublattice reaches it.
  CHECK(classify_case(g, hex_lattice()).id == "2.1");
  // Against the level-zero slice: the projection is strictly larger.
  CHECK(classify_case(g, l.slice(QF(0)).module).id == "2.2");
}

TEST_CASE("profiles of the whole catalog match the reference table") {
  auto cat = hex_catalog();
  auto fix = hex_fixtures();
  REQUIRE(cat.size() == fix.size());
  for (size_t i = 0; i < cat.size(); ++i) {
    INFO(cat[i].id);
    CHECK(cat[i].id == fix[i].id);
    CHECK(cat[i].v1 == fix[i].v1);
    HexProfile p = hex_profile(cat[i].group);
    CHECK(p.a == fix[i].a);
    CHECK(p.b == fix[i].b);
    CHECK(p.c == fix[i].c);
    CHECK(p.o == fix[i].o);
  }
}

TEST_CASE("lattice names") {
  CHECK(lattice_name(hex_lattice()) == "H");
  CHECK(lattice_name(mod2({{"1/2", "0"}, {"0", "1/2*r3"}})) == "rec I");
  CHECK(lattice_name(mod2({{"1", "0"}, {"1", "r3"}})) == "2 rec I");
  // Unnamed lattices fall back to the generator listing.
  std::string generic = lattice_name(mod2({{"5", "1"}, {"0", "7"}}));
  CHECK(generic.find("(") != std::string::npos);
}

TEST_CASE("classification rejects an unreachable target") {
  // The running example projects onto 5 Z; the integers are unreachable.
  CHECK_THROWS(classify_case(trivial_group(mod2({{"5", "0", "4"},
                                                 {"0", "1", "0"},
                                                 {"0", "0", "7"}})),
                             mod2({{"1", "0"}, {"0", "1"}})));
}
