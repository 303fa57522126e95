#include "latscope/classify.hpp"

#include <sstream>
#include <stdexcept>

#include "latscope/holohedry.hpp"

namespace latscope {

namespace {

QF qf_mod(const QF& x, const QF& b) {
  QF q = x / b;
  return x - QF(mpz_class(q.floor())) * b;
}

Vec horizontal(const Vec& v) { return Vec(v.begin(), v.end() - 1); }

Vec combine(const std::vector<Vec>& basis, const ZRow& coeffs) {
  Vec r(basis[0].size(), QF(0));
  for (size_t j = 0; j < basis.size(); ++j)
    if (coeffs[j] != 0) r = vadd(r, vscale(QF(coeffs[j]), basis[j]));
  return r;
}

std::string module_str(const ZModule& m) {
  std::string s = "{";
  for (size_t i = 0; i < m.gens().size(); ++i) {
    if (i) s += ", ";
    s += "(";
    for (size_t j = 0; j < m.gens()[i].size(); ++j) {
      if (j) s += ", ";
      s += m.gens()[i][j].str();
    }
    s += ")";
  }
  return s + "}";
}

}  // namespace

VerticalForm vertical_form(const Vec& a, const Vec& b, const Vec& vert) {
  if (a.size() != 3 || b.size() != 3 || vert.size() != 3)
    throw std::invalid_argument("vertical_form: dimension must be 3");
  if (!vert[0].is_zero() || !vert[1].is_zero() || vert[2].sign() <= 0)
    throw std::invalid_argument("vertical_form: bad vertical generator");
  VerticalForm f;
  f.c = vert[2];
  f.a3 = qf_mod(a[2], f.c);
  f.b3 = qf_mod(b[2], f.c);
  f.a_hat = horizontal(a);
  f.b_hat = horizontal(b);

  std::vector<Vec> heights = {{f.a3}, {f.b3}, {f.c}};
  auto [rows, den] = rationalize(heights, 1);
  ZMat kernel = left_kernel(rows);
  std::vector<Vec> dgens;
  for (const auto& k : kernel)
    dgens.push_back({QF(k[0]), QF(k[1])});
  f.d = ZModule::from_generators(dgens, 2);

  const QF half = f.c / QF(2);
  auto flat = [&](const QF& h) { return h.is_zero() || h == half; };
  f.sigma_in_l = flat(f.a3) && flat(f.b3);
  return f;
}

VerticalForm vertical_form(const ZModule& L) {
  auto mv = L.minimal_vertical();
  if (!mv) throw std::invalid_argument("vertical_form: no vertical vector");
  ZRow k(mv->second.begin(), mv->second.end());
  ZMat m = unimodular_with_first_row(k);
  Vec vert(3, QF(0));
  vert[2] = mv->first;
  return vertical_form(combine(L.gens(), m[1]), combine(L.gens(), m[2]),
                       vert);
}

ZModule r0_from_form(const VerticalForm& f) {
  std::vector<Vec> gens;
  for (const auto& mn : f.d.gens())
    gens.push_back(vadd(vscale(mn[0], f.a_hat), vscale(mn[1], f.b_hat)));
  return ZModule::from_generators(gens, 2);
}

char width_class(const QF& y0, const QF& c, const std::optional<QF>& y1) {
  if (qf_mod(y0, c).is_zero()) return 'A';
  if (y1) {
    if (qf_mod(y0 - *y1, c).is_zero()) return 'B';
    if (qf_mod(y0 - *y1 - c / QF(2), c).is_zero()) return 'C';
  }
  return 'O';
}

ZModule hex_lattice() {
  const QF h = QF(mpq_class(1, 2));
  return ZModule::from_generators(
      {{QF(1), QF(0)}, {h, h * QF::sqrt3()}}, 2);
}

namespace {

// One classification attempt with a fixed lattice orientation; the caller
// retries under the holohedry of the target when this fails.
std::optional<CaseLabel> classify_direct(const ZModule& L,
                                         const CrystalGroup::SigmaData& sd,
                                         bool v_sigma_in_l, const ZModule& m) {
  CaseLabel out;
  if (!L.minimal_vertical()) {
    if (L.slice(QF(0)).module != m) return std::nullopt;
    out.id = "1";
    return out;
  }

  VerticalForm f = vertical_form(L);
  out.c = f.c;
  const QF half = f.c / QF(2);

  if (!f.sigma_in_l) {
    // The vertical reflection is not even a symmetry of the lattice.
    if (L.project() == m)
      out.id = "2.1";
    else if (f.d.rank() == 2 && L.slice(QF(0)).module == m)
      out.id = "2.2";
    else
      return std::nullopt;
    out.a3 = f.a3;
    out.b3 = f.b3;
    out.a_hat = f.a_hat;
    out.b_hat = f.b_hat;
    return out;
  }

  // Normalise the heights to (0, 0) or (c/2, 0).
  if (f.a3 == half && f.b3 == half) {
    Vec a_new = f.b_hat;
    Vec b_new = vsub(f.a_hat, f.b_hat);
    f.a_hat = a_new;
    f.b_hat = b_new;
    f.b3 = QF(0);
  } else if (f.a3.is_zero() && f.b3 == half) {
    std::swap(f.a_hat, f.b_hat);
    std::swap(f.a3, f.b3);
  }
  out.a3 = f.a3;
  out.b3 = f.b3;
  out.a_hat = f.a_hat;
  out.b_hat = f.b_hat;

  if (!sd.in_j || v_sigma_in_l) {
    if (f.a3.is_zero()) {
      if (L.project() != m) return std::nullopt;
      out.id = "3.1";
    } else if (L.project() == m) {
      out.id = "3.2";
    } else if (L.slice(QF(0)).module == m) {
      out.id = "3.3";
    } else {
      return std::nullopt;
    }
    return out;
  }

  out.v1 = sd.v1;
  out.y1 = sd.y1;
  if (f.a3.is_zero()) {
    ZModule pl = L.project();
    if (pl == m) {
      out.id = "4.1";
      return out;
    }
    std::vector<Vec> gens = pl.gens();
    gens.push_back(sd.v1);
    if (ZModule::from_generators(gens, 2) != m) return std::nullopt;
    Mat basis(pl.gens().begin(), pl.gens().end());
    auto t = solve_linear(transpose(basis), sd.v1);
    if (!t) return std::nullopt;
    QF f1 = (*t)[0] - QF((*t)[0].floor());
    QF f2 = (*t)[1] - QF((*t)[1].floor());
    const QF hh = QF(mpq_class(1, 2));
    if (f1.is_zero() && f2 == hh)
      out.id = "4.2";
    else if (f1 == hh && (f2.is_zero() || f2 == hh))
      out.id = "4.3";
    else
      return std::nullopt;
    return out;
  }

  // a3 = c/2: the target must relate to (a_hat, b_hat) in one of five ways.
  const QF hh = QF(mpq_class(1, 2));
  auto mk = [&](const Vec& u, const Vec& v) {
    return ZModule::from_generators({u, v}, 2);
  };
  const Vec& ah = f.a_hat;
  const Vec& bh = f.b_hat;
  struct Option {
    const char* id;
    ZModule mod;
  };
  // The middle two relations describe the same configuration written with
  // different generator pairs for the target (replacing b_hat by
  // b_hat + 2 a_hat converts one into the other), so which of them the
  // normal form lands on is a labelling convention; the ids here are
  // calibrated against the reference family in hex_catalog().
  const Option options[] = {
      {"5.1", mk(ah, bh)},
      {"5.2", mk(ah, vscale(hh, bh))},
      {"5.3", mk(vscale(QF(2), ah), vscale(hh, bh))},
      {"5.4", mk(vadd(ah, vscale(hh, bh)), bh)},
      {"5.5", mk(vscale(QF(2), ah), bh)},
  };
  for (const auto& opt : options) {
    if (opt.mod == m) {
      out.id = opt.id;
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace

CaseLabel classify_case(const CrystalGroup& g, const ZModule& m) {
  if (g.dim() != 3 || m.dim() != 2 || !m.is_lattice())
    throw std::invalid_argument("classify_case: need a 3d group and a 2d lattice");
  const ZModule& L = g.lattice();
  auto sd = g.sigma_data();
  bool v_sigma_in_l = false;
  if (sd.in_j) {
    Vec v = sd.v1;
    v.push_back(sd.y1);
    v_sigma_in_l = L.contains(v);
  }

  // The case descriptions fix the lattice only up to the holohedry of the
  // target, and for rich holohedries two of the paired descriptions can
  // describe the same group in different orientations.  Classify every
  // orientation and keep the smallest label, so the result is invariant
  // under replacing the group by a rotated/reflected copy.
  std::optional<CaseLabel> best;
  auto consider = [&](const ZModule& lat, const CrystalGroup::SigmaData& s) {
    if (auto r = classify_direct(lat, s, v_sigma_in_l, m))
      if (!best || r->id < best->id) best = *r;
  };
  consider(L, sd);
  for (const auto& alpha : holohedry(m)) {
    if (alpha == identity_mat(2)) continue;
    Mat lifted = lift_block(alpha, 1);
    std::vector<Vec> gens;
    for (const auto& gen : L.gens()) gens.push_back(mat_vec(lifted, gen));
    ZModule turned = ZModule::from_generators(gens, 3);
    CrystalGroup::SigmaData sd2 = sd;
    if (sd.in_j) sd2.v1 = mat_vec(alpha, sd.v1);
    consider(turned, sd2);
  }
  if (best) return *best;

  std::ostringstream msg;
  msg << "classify_case: group does not project onto the target lattice;"
      << " P(L) = " << module_str(L.project())
      << ", R_0 = " << module_str(L.slice(QF(0)).module)
      << ", target = " << module_str(m);
  throw std::invalid_argument(msg.str());
}

HexProfile hex_profile(const CrystalGroup& g) {
  auto at = [&](long num, long den) {
    return period_module(g, QF(mpq_class(num, den))).module;
  };
  auto pick = [&](long n1, long d1, long n2, long d2) {
    ZModule first = at(n1, d1);
    if (first != at(n2, d2))
      throw std::logic_error(
          "hex_profile: representatives of one width class disagree");
    return first;
  };
  HexProfile p;
  p.a = pick(1, 1, 2, 1);
  p.b = pick(5, 4, 9, 4);
  p.c = pick(7, 4, 11, 4);
  p.o = pick(1, 3, 2, 5);
  return p;
}

std::vector<HexFixture> hex_fixtures() {
  const QF r3 = QF::sqrt3();
  const QF h = QF(mpq_class(1, 2));
  const QF q = QF(mpq_class(1, 4));
  auto mk = [](std::vector<Vec> gens) {
    return ZModule::from_generators(gens, 2);
  };
  const ZModule H = hex_lattice();
  const ZModule H2 = mk({{QF(2), QF(0)}, {QF(1), r3}});
  const ZModule Hh = mk({{h, QF(0)}, {q, q * r3}});
  const ZModule recI = mk({{h, QF(0)}, {h, h * r3}});
  const ZModule recI2 = mk({{QF(1), QF(0)}, {QF(1), r3}});
  const ZModule recII = mk({{QF(1), QF(0)}, {QF(0), h * r3}});
  const ZModule recIII = mk({{q, q * r3}, {QF(mpq_class(3, 2)), -h * r3}});
  const ZModule rp = mk({{QF(1), QF(0)}, {q, q * r3}});
  const ZModule rp2 = mk({{QF(2), QF(0)}, {h, h * r3}});
  const ZModule rm = mk({{QF(1), QF(0)}, {QF(mpq_class(3, 4)), q * r3}});
  const ZModule rm2 = mk({{QF(2), QF(0)}, {QF(mpq_class(3, 2)), h * r3}});
  const ZModule big21 = mk({{QF(3), QF(0)}, {h, h * r3}});
  const ZModule thin22 = mk({{QF(1), QF(0)}, {h, r3 / QF(6)}});

  const Vec none;
  const Vec z2{QF(0), QF(0)};
  const Vec ha{h, QF(0)};
  const Vec hb{q, q * r3};
  const Vec hab{QF(mpq_class(3, 4)), q * r3};

  std::vector<HexFixture> out;
  auto add = [&](const char* id, Vec v1, ZModule a, ZModule b, ZModule c,
                 ZModule o) {
    out.push_back({id, std::move(v1), std::move(a), std::move(b),
                   std::move(c), std::move(o)});
  };
  add("1", none, H, H, H, H);
  add("2.1", none, H, big21, big21, big21);
  add("2.2", none, thin22, H, H, H);
  add("3.1", none, H, H, H, H);
  add("3.2", none, H, rp2, rp2, rp2);
  add("3.3", none, recI, H, H, H);
  add("4.1", z2, H, H, H, H);
  add("4.1", ha, recI, recI, H, H);
  add("4.1", hb, rp, rp, H, H);
  add("4.1", hab, rm, rm, H, H);
  add("4.2", {QF(1), QF(0)}, H, H, rp2, rp2);
  add("4.3", {h, h * r3}, H, H, recI2, recI2);
  add("5.1", z2, H, rp2, H, rp2);
  add("5.1", {QF(1), QF(0)}, H, H, rp2, rp2);
  add("5.2", {h, h * r3}, H, rp2, rm2, H2);
  add("5.2", {QF(mpq_class(3, 2)), h * r3}, H, rm2, rp2, H2);
  add("5.3", hb, rp, recIII, H, rp2);
  add("5.3", {QF(1), QF(0)}, rp, H, recIII, rp2);
  add("5.4", {h, h * r3}, recI, H, recII, recI2);
  add("5.4", {QF(1), h * r3}, recI, recII, H, recI2);
  add("5.5", z2, recI, H, recI, H);
  add("5.5", ha, recI, recI, H, H);
  add("5.5", hb, Hh, rp, rm, H);
  add("5.5", hab, Hh, rm, rp, H);
  return out;
}

std::string lattice_name(const ZModule& m) {
  const QF h = QF(mpq_class(1, 2));
  const QF q = QF(mpq_class(1, 4));
  const QF r3 = QF::sqrt3();
  struct Named {
    const char* name;
    std::vector<Vec> gens;
  };
  const std::vector<Named> named = {
      {"H", {{QF(1), QF(0)}, {h, h * r3}}},
      {"rec I", {{h, QF(0)}, {QF(0), h * r3}}},
      {"rec II", {{QF(0), h * r3}, {QF(1), QF(0)}}},
      {"rec III", {{q, q * r3}, {QF(mpq_class(3, 2)), -h * r3}}},
      {"R_{pi/3} rec I", {{q, q * r3}, {-QF(mpq_class(3, 4)), q * r3}}},
      {"R_{-pi/3} rec I", {{q, -q * r3}, {QF(mpq_class(3, 4)), q * r3}}},
  };
  const std::pair<const char*, QF> scales[] = {
      {"", QF(1)}, {"2 ", QF(2)}, {"1/2 ", h}};
  for (const auto& [prefix, scale] : scales) {
    for (const auto& nm : named) {
      std::vector<Vec> gens;
      for (const auto& gv : nm.gens) gens.push_back(vscale(scale, gv));
      if (ZModule::from_generators(gens, 2) == m)
        return std::string(prefix) + nm.name;
    }
  }
  return module_str(m);
}

}  // namespace latscope
