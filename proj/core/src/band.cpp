#include "latscope/band.hpp"

#include <stdexcept>

namespace latscope {

namespace {

// x reduced into [0, b), b > 0.
QF qf_mod(const QF& x, const QF& b) {
  QF q = x / b;
  return x - QF(mpz_class(q.floor())) * b;
}

Vec drop_last(const Vec& v) { return Vec(v.begin(), v.end() - 1); }

Vec combine(const std::vector<Vec>& basis, const ZRow& coeffs) {
  Vec r(basis[0].size(), QF(0));
  for (size_t j = 0; j < basis.size(); ++j)
    if (coeffs[j] != 0) r = vadd(r, vscale(QF(coeffs[j]), basis[j]));
  return r;
}

// Adapted basis aligned to the horizontal vector alpha; empty when alpha
// is not the horizontal part of any member.
std::optional<AdaptedBasis> adapted_for_horizontal(const ZModule& L,
                                                   const Vec& alpha) {
  if (is_zero_vec(alpha))
    throw std::invalid_argument("adapted_generators: zero horizontal part");
  auto mv = L.minimal_vertical();
  if (!mv) throw std::invalid_argument("adapted_generators: no vertical vector");

  // Change basis so the first generator is the minimal vertical (0, b0).
  ZRow k(mv->second.begin(), mv->second.end());
  ZMat m = unimodular_with_first_row(k);
  const int n = L.rank() - 1;
  std::vector<Vec> h;  // h[0] = (0, b0), then lifts of a horizontal basis
  for (int i = 0; i <= n; ++i) h.push_back(combine(L.gens(), m[i]));

  std::vector<Vec> c;  // horizontal basis of the projection
  for (int i = 1; i <= n; ++i) c.push_back(drop_last(h[i]));

  // Integer coordinates of alpha in that horizontal basis.
  std::vector<Vec> joint = c;
  joint.push_back(alpha);
  auto [rows, den] = rationalize(joint, L.dim() - 1);
  ZRow target = rows.back();
  rows.pop_back();
  auto w = solve_left(rows, target);
  if (!w) return std::nullopt;

  AdaptedBasis ab;
  ab.b0 = mv->first;
  ab.m_star = row_gcd(*w);
  ZRow u = *w;
  for (auto& x : u) x /= ab.m_star;

  // Second change of basis: first horizontal generator becomes alpha/m_star.
  ZMat nm = unimodular_with_first_row(u);
  for (int i = 0; i < n; ++i) {
    Vec lift(L.dim(), QF(0));
    for (int j = 0; j < n; ++j)
      if (nm[i][j] != 0) lift = vadd(lift, vscale(QF(nm[i][j]), h[j + 1]));
    QF beta = qf_mod(lift.back(), ab.b0);
    ab.pairs.emplace_back(drop_last(lift), beta);
  }
  return ab;
}

// Some lift (p, q) of the horizontal vector p, as its height q.
std::optional<QF> lift_height(const ZModule& L, const Vec& p) {
  std::vector<Vec> joint;
  for (const auto& g : L.gens()) joint.push_back(drop_last(g));
  joint.push_back(p);
  auto [rows, den] = rationalize(joint, L.dim() - 1);
  ZRow target = rows.back();
  rows.pop_back();
  auto sol = solve_left(rows, target);
  if (!sol) return std::nullopt;
  QF q;
  for (size_t i = 0; i < L.gens().size(); ++i)
    if ((*sol)[i] != 0) q += QF((*sol)[i]) * L.gens()[i].back();
  return q;
}

}  // namespace

AdaptedBasis adapted_generators(const ZModule& L, const Vec& target) {
  if (!L.contains(target))
    throw std::invalid_argument("adapted_generators: target not a member");
  auto ab = adapted_for_horizontal(L, drop_last(target));
  if (!ab) throw std::logic_error("adapted_generators: lost the target");
  return *ab;
}

bool band_period_check(const ZModule& L, const QF& y0, const Vec& p) {
  if (static_cast<int>(p.size()) != L.dim() - 1)
    throw std::invalid_argument("band_period_check: dimension mismatch");
  Vec p0 = p;
  p0.push_back(QF(0));
  if (L.contains(p0)) return true;
  if (!L.minimal_vertical()) return false;

  auto ab = adapted_for_horizontal(L, p);
  if (!ab) return false;
  const QF& b0 = ab->b0;
  QF t = qf_mod(QF(ab->m_star) * ab->pairs[0].second, b0);
  if (y0 >= b0) return true;
  if (t.is_zero()) return true;

  // Heights of the adapted generators fill in a subgroup S of R/(b0 Z);
  // the test is whether translating S cap [0, y0] by t stays in [0, y0]
  // mod b0.  An irrational height ratio makes S dense, so some translated
  // point always escapes once t != 0 and y0 < b0.
  std::vector<mpq_class> ratios;
  for (size_t i = 0; i < ab->pairs.size(); ++i) {
    QF r = ab->pairs[i].second / b0;
    if (!r.is_rational()) return false;
    ratios.push_back(r.to_rational());
  }

  mpz_class big_q = 1;
  for (const auto& r : ratios) {
    mpz_class d = r.get_den();
    mpz_lcm(big_q.get_mpz_t(), big_q.get_mpz_t(), d.get_mpz_t());
  }
  mpz_class g = big_q;
  for (const auto& r : ratios) {
    mpz_class scaled = r.get_num() * (big_q / r.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
  }
  mpz_class count = big_q / g;
  QF step = QF(mpq_class(g, big_q)) * b0;
  QF s(0);
  for (mpz_class j = 0; j < count; ++j, s += step) {
    if (s > y0) continue;
    if (qf_mod(s + t, b0) > y0) return false;
  }
  return true;
}

bool sigma_preserves(const ZModule& L) {
  for (const auto& g : L.gens()) {
    Vec sg = g;
    sg.back() = -sg.back();
    if (!L.contains(sg)) return false;
  }
  return true;
}

PropCase prop_latt_check(const ZModule& L, const QF& y0, const Vec& p) {
  if (static_cast<int>(p.size()) != L.dim() - 1)
    throw std::invalid_argument("prop_latt_check: dimension mismatch");
  Vec p0 = p;
  p0.push_back(QF(0));
  if (L.contains(p0)) return PropCase::CaseI;

  auto q = lift_height(L, p);
  auto mv = L.minimal_vertical();
  if (q && mv && mv->first <= y0) return PropCase::CaseII;

  if (q && sigma_preserves(L)) {
    // The heights lifting p form q + b0 Z (just {q} without a vertical,
    // which forces q = 0, already covered above); take the least positive
    // one.
    if (mv) {
      const QF& b0 = mv->first;
      QF r = qf_mod(*q, b0);
      QF least = r.is_zero() ? b0 : r;
      if (least <= y0) return PropCase::CaseIII;
    }
  }
  return PropCase::None;
}

}  // namespace latscope
