#include "latscope/projection.hpp"

#include <optional>

namespace latscope {

namespace {

Vec with_height(const Vec& v, const QF& y) {
  Vec w = v;
  w.push_back(y);
  return w;
}

Vec vertical(int dim, const QF& y) {
  Vec v(dim, QF(0));
  v.back() = y;
  return v;
}

Vec horizontal(const Vec& v) { return Vec(v.begin(), v.end() - 1); }

// Decomposition delta = diag(alpha, sign), when delta has block form.
std::optional<std::pair<Mat, int>> block_form(const Mat& delta) {
  const int n = static_cast<int>(delta.size()) - 1;
  for (int i = 0; i < n; ++i)
    if (!delta[i][n].is_zero() || !delta[n][i].is_zero()) return std::nullopt;
  const QF& corner = delta[n][n];
  int sign;
  if (corner == QF(1))
    sign = 1;
  else if (corner == QF(-1))
    sign = -1;
  else
    return std::nullopt;
  Mat alpha(n, Vec(n, QF(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) alpha[i][j] = delta[i][j];
  return std::make_pair(std::move(alpha), sign);
}

void push_unique(std::vector<Vec>& vs, const Vec& v) {
  for (const auto& x : vs)
    if (x == v) return;
  vs.push_back(v);
}

// Realisable translation parts for alpha at width y0 when (0, y0) is not
// a lattice vector: a lift with + sign needs a representative reaching
// height 0, a lift with - sign one reaching height y0.
std::vector<Vec> semy0_candidates(const CrystalGroup& g, const QF& y0,
                                  const Mat& alpha) {
  std::vector<Vec> out;
  const ZModule& L = g.lattice();
  for (int sign : {1, -1}) {
    auto rep = g.find_rep(lift_block(alpha, sign));
    if (!rep) continue;
    QF need = (sign == 1 ? QF(0) : y0) - rep->v.back();
    auto s = L.slice(need);
    if (s.nonempty) push_unique(out, vadd(horizontal(rep->v), s.x0));
  }
  return out;
}

}  // namespace

ProjSym proj_symmetry(const CrystalGroup& g, const QF& y0, const Mat& alpha,
                      const Vec& v) {
  if (g.contains(lift_block(alpha, 1), with_height(v, QF(0))))
    return {true, "a"};
  if (g.contains(lift_block(alpha, -1), with_height(v, y0)))
    return {true, "b"};
  const ZModule& L = g.lattice();
  if (L.contains(vertical(g.dim(), y0))) {
    ZModule pl = L.project();
    for (int sign : {1, -1}) {
      auto rep = g.find_rep(lift_block(alpha, sign));
      if (rep && pl.contains(vsub(v, horizontal(rep->v))))
        return {true, sign == 1 ? "c" : "d"};
    }
  }
  return {false, ""};
}

ProjSym restr_symmetry(const CrystalGroup& g, const QF& r, const Mat& alpha,
                       const Vec& v) {
  if (g.contains(lift_block(alpha, 1), with_height(v, QF(0))))
    return {true, "a"};
  if (g.contains(lift_block(alpha, -1), with_height(v, QF(2) * r)))
    return {true, "b"};
  return {false, ""};
}

PeriodModule period_module(const CrystalGroup& g, const QF& y0) {
  const ZModule& L = g.lattice();
  const int n = g.dim() - 1;
  auto sd = g.sigma_data();
  PeriodModule out;
  std::vector<Vec> gens;
  if (L.contains(vertical(g.dim(), y0))) {
    out.derivation = "width-in-lattice";
    for (const auto& l : L.gens()) gens.push_back(horizontal(l));
    if (sd.in_j) gens.push_back(sd.v1);
  } else {
    out.derivation = "width-outside-lattice";
    auto s0 = L.slice(QF(0));
    gens = s0.module.gens();
    if (sd.in_j) {
      auto s = L.slice(y0 - sd.y1);
      if (s.nonempty) gens.push_back(vadd(sd.v1, s.x0));
    }
  }
  out.module = ZModule::from_generators(gens, n);
  return out;
}

PointGroupProjected point_group_projected(const CrystalGroup& g,
                                          const QF& y0) {
  PointGroupProjected out;
  const ZModule& L = g.lattice();
  const bool com = L.contains(vertical(g.dim(), y0));
  for (const auto& rep : g.reps()) {
    auto bf = block_form(rep.delta);
    if (!bf) continue;
    bool seen = false;
    for (const auto& a : out.j0)
      if (a == bf->first) seen = true;
    if (seen) continue;
    out.j0.push_back(bf->first);

    ProjElem elem;
    elem.alpha = bf->first;
    if (com) {
      for (int sign : {1, -1})
        if (auto r = g.find_rep(lift_block(bf->first, sign)))
          push_unique(elem.v_candidates, horizontal(r->v));
    } else {
      elem.v_candidates = semy0_candidates(g, y0, bf->first);
    }
    if (!elem.v_candidates.empty()) out.jtilde.push_back(std::move(elem));
  }
  return out;
}

RestrictionGroup restriction_group(const CrystalGroup& g, const QF& r) {
  RestrictionGroup out;
  const ZModule& L = g.lattice();
  const int n = g.dim() - 1;
  const QF width = QF(2) * r;
  auto sd = g.sigma_data();

  std::vector<Vec> gens = L.slice(QF(0)).module.gens();
  if (sd.in_j) {
    auto s = L.slice(width - sd.y1);
    if (s.nonempty) gens.push_back(vadd(sd.v1, s.x0));
  }
  out.lhat = ZModule::from_generators(gens, n);

  std::vector<Mat> seen;
  for (const auto& rep : g.reps()) {
    auto bf = block_form(rep.delta);
    if (!bf) continue;
    bool dup = false;
    for (const auto& a : seen)
      if (a == bf->first) dup = true;
    if (dup) continue;
    seen.push_back(bf->first);
    ProjElem elem;
    elem.alpha = bf->first;
    elem.v_candidates = semy0_candidates(g, width, bf->first);
    if (!elem.v_candidates.empty()) out.jhat.push_back(std::move(elem));
  }
  return out;
}

}  // namespace latscope
