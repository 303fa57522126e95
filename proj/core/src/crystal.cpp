#include "latscope/crystal.hpp"

#include <stdexcept>

namespace latscope {

Mat sigma_matrix(int dim) {
  Mat s = identity_mat(dim);
  s[dim - 1][dim - 1] = QF(-1);
  return s;
}

Mat lift_block(const Mat& alpha, int sign) {
  const int n = static_cast<int>(alpha.size());
  Mat m(n + 1, Vec(n + 1, QF(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = alpha[i][j];
  m[n][n] = QF(sign);
  return m;
}

Vec reduce_mod_lattice(const ZModule& L, const Vec& v) {
  Mat basis(L.gens().begin(), L.gens().end());
  auto t = solve_linear(transpose(basis), v);
  if (!t) throw std::invalid_argument("reduce_mod_lattice: not a lattice");
  Vec r(L.dim(), QF(0));
  for (int i = 0; i < L.rank(); ++i) {
    QF frac = (*t)[i] - QF((*t)[i].floor());
    if (!frac.is_zero()) r = vadd(r, vscale(frac, L.gens()[i]));
  }
  return r;
}

CrystalGroup CrystalGroup::make(const ZModule& L, std::vector<OrthoElem> reps) {
  CrystalGroup g;
  g.lattice_ = L;
  for (auto& rep : reps) rep.v = reduce_mod_lattice(L, rep.v);
  g.reps_ = std::move(reps);
  return g;
}

std::optional<OrthoElem> CrystalGroup::find_rep(const Mat& delta) const {
  for (const auto& rep : reps_)
    if (rep.delta == delta) return rep;
  return std::nullopt;
}

bool CrystalGroup::contains(const Mat& delta, const Vec& v) const {
  auto rep = find_rep(delta);
  return rep && lattice_.contains(vsub(v, rep->v));
}

std::vector<std::string> CrystalGroup::validate() const {
  std::vector<std::string> problems;
  if (!lattice_.is_lattice()) {
    problems.push_back("lattice generators are not a full-rank basis");
    return problems;
  }
  const int n = dim();
  bool has_identity = false;
  for (size_t i = 0; i < reps_.size(); ++i) {
    const auto& rep = reps_[i];
    std::string tag = "rep " + std::to_string(i) + ": ";
    if (static_cast<int>(rep.delta.size()) != n ||
        static_cast<int>(rep.v.size()) != n) {
      problems.push_back(tag + "dimension mismatch");
      continue;
    }
    if (!is_orthogonal(rep.delta)) {
      problems.push_back(tag + "point part is not orthogonal");
      continue;
    }
    bool preserves = true;
    for (const auto& g : lattice_.gens())
      if (!lattice_.contains(mat_vec(rep.delta, g))) preserves = false;
    if (!preserves) {
      problems.push_back(tag + "point part does not preserve the lattice");
      continue;
    }
    for (size_t j = 0; j < i; ++j)
      if (reps_[j].delta == rep.delta)
        problems.push_back(tag + "duplicate point part");
    if (rep.delta == identity_mat(n)) {
      has_identity = true;
      if (!lattice_.contains(rep.v))
        problems.push_back(tag + "identity carries a non-lattice translation");
    }
  }
  if (!has_identity) problems.push_back("identity element missing");
  if (!problems.empty()) return problems;

  for (size_t i = 0; i < reps_.size(); ++i) {
    for (size_t j = 0; j < reps_.size(); ++j) {
      Mat d = mat_mul(reps_[i].delta, reps_[j].delta);
      Vec v = vadd(reps_[i].v, mat_vec(reps_[i].delta, reps_[j].v));
      if (!contains(d, v))
        problems.push_back("product of reps " + std::to_string(i) + " and " +
                           std::to_string(j) + " escapes the group");
    }
  }
  return problems;
}

CrystalGroup::SigmaData CrystalGroup::sigma_data() const {
  SigmaData out;
  auto rep = find_rep(sigma_matrix(dim()));
  if (!rep) return out;
  out.in_j = true;
  out.v1 = Vec(rep->v.begin(), rep->v.end() - 1);
  out.y1 = rep->v.back();
  if (auto mv = lattice_.minimal_vertical()) {
    const QF& b0 = mv->first;
    QF q = out.y1 / b0;
    out.y1 -= QF(q.floor()) * b0;
  }
  return out;
}

namespace {

QF qq(long n, long d) { return QF(mpq_class(n, d)); }

Vec v3(const QF& x, const QF& y, const QF& z) { return Vec{x, y, z}; }

CatalogEntry entry(const std::string& id, const std::vector<Vec>& gens,
                   std::optional<Vec> v1) {
  CatalogEntry e;
  e.id = id;
  ZModule L = ZModule::from_generators(gens, 3);
  std::vector<OrthoElem> reps;
  reps.push_back({identity_mat(3), Vec(3, QF(0))});
  if (v1) {
    e.v1 = *v1;
    Vec t = *v1;
    t.push_back(qq(1, 4));
    reps.push_back({sigma_matrix(3), t});
  }
  e.group = CrystalGroup::make(L, std::move(reps));
  return e;
}

}  // namespace

std::vector<CatalogEntry> hex_catalog() {
  const QF r3 = QF::sqrt3();
  const QF h = qq(1, 2);
  const Vec h1 = v3(1, 0, 0);
  const Vec h2 = v3(h, h * r3, 0);
  const Vec c0 = v3(0, 0, 1);

  std::vector<CatalogEntry> cat;
  // Point group without the vertical reflection.
  cat.push_back(entry("1", {h1, h2, v3(1, 1, 1)}, std::nullopt));
  cat.push_back(entry("2.1", {v3(1, 0, qq(1, 3)), h2, c0}, std::nullopt));
  cat.push_back(
      entry("2.2", {h1, v3(h, r3 / QF(6), qq(2, 3)), c0}, std::nullopt));
  cat.push_back(entry("3.1", {h1, h2, c0}, std::nullopt));
  cat.push_back(entry("3.2", {v3(1, 0, h), h2, c0}, std::nullopt));
  cat.push_back(entry("3.3", {v3(h, 0, h), h2, c0}, std::nullopt));

  // With the vertical reflection; translations (v1, 1/4).
  const Vec zero2{QF(0), QF(0)};
  const Vec ha{h, QF(0)};
  const Vec hb{qq(1, 4), r3 / QF(4)};
  const Vec hab{qq(3, 4), r3 / QF(4)};
  for (const Vec& v1 : {zero2, ha, hb, hab})
    cat.push_back(entry("4.1", {h1, h2, c0}, v1));
  cat.push_back(entry("4.2", {v3(2, 0, 0), h2, c0}, Vec{QF(1), QF(0)}));
  cat.push_back(
      entry("4.3", {h1, v3(1, r3, 0), c0}, Vec{h, h * r3}));

  const std::vector<Vec> l51 = {v3(1, 0, h), h2, c0};
  cat.push_back(entry("5.1", l51, zero2));
  cat.push_back(entry("5.1", l51, Vec{QF(1), QF(0)}));
  const std::vector<Vec> l52 = {v3(1, 0, h), v3(1, r3, 0), c0};
  cat.push_back(entry("5.2", l52, Vec{h, h * r3}));
  cat.push_back(entry("5.2", l52, Vec{qq(3, 2), h * r3}));
  const std::vector<Vec> l53 = {v3(qq(3, 4), -r3 / QF(4), h), h2, c0};
  cat.push_back(entry("5.3", l53, Vec{qq(1, 4), r3 / QF(4)}));
  cat.push_back(entry("5.3", l53, Vec{QF(1), QF(0)}));
  const std::vector<Vec> l54 = {v3(h, 0, h), v3(1, r3, 0), c0};
  cat.push_back(entry("5.4", l54, Vec{h, h * r3}));
  cat.push_back(entry("5.4", l54, Vec{QF(1), h * r3}));
  const std::vector<Vec> l55 = {v3(h, 0, h), h2, c0};
  for (const Vec& v1 : {zero2, ha, hb, hab})
    cat.push_back(entry("5.5", l55, v1));
  return cat;
}

}  // namespace latscope
