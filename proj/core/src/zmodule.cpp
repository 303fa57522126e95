#include "latscope/zmodule.hpp"

#include <stdexcept>

namespace latscope {

std::pair<ZMat, mpz_class> rationalize(const std::vector<Vec>& vecs, int dim) {
  mpz_class den = 1;
  for (const auto& v : vecs) {
    if (static_cast<int>(v.size()) != dim)
      throw std::invalid_argument("rationalize: dimension mismatch");
    for (const auto& q : v) {
      for (const mpq_class* c : {&q.c1(), &q.cr2(), &q.cr3(), &q.cr6()}) {
        mpz_class d = c->get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
      }
    }
  }
  ZMat rows;
  rows.reserve(vecs.size());
  for (const auto& v : vecs) {
    ZRow row;
    row.reserve(4 * dim);
    for (const auto& q : v) {
      for (const mpq_class* c : {&q.c1(), &q.cr2(), &q.cr3(), &q.cr6()}) {
        mpq_class scaled = *c * den;
        row.push_back(scaled.get_num());  // denominator is 1 by construction
      }
    }
    rows.push_back(std::move(row));
  }
  return {rows, den};
}

Vec derationalize(const ZRow& row, const mpz_class& den, int dim) {
  Vec v;
  v.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    mpq_class a(row[4 * i], den), b(row[4 * i + 1], den),
        c(row[4 * i + 2], den), d(row[4 * i + 3], den);
    a.canonicalize();
    b.canonicalize();
    c.canonicalize();
    d.canonicalize();
    v.emplace_back(a, b, c, d);
  }
  return v;
}

ZModule ZModule::from_generators(const std::vector<Vec>& gens, int dim) {
  ZModule m(dim);
  auto [rows, den] = rationalize(gens, dim);
  Hnf f = row_hnf(rows);
  for (int i = 0; i < f.rank; ++i)
    m.gens_.push_back(derationalize(f.h[i], den, dim));
  return m;
}

std::optional<std::vector<mpz_class>> ZModule::coordinates(const Vec& v) const {
  if (static_cast<int>(v.size()) != dim_)
    throw std::invalid_argument("coordinates: dimension mismatch");
  std::vector<Vec> all = gens_;
  all.push_back(v);
  auto [rows, den] = rationalize(all, dim_);
  ZRow target = rows.back();
  rows.pop_back();
  return solve_left(rows, target);
}

bool ZModule::real_independent() const {
  Mat a(gens_.begin(), gens_.end());
  return mat_rank(a) == rank();
}

ZModule ZModule::dual() const {
  if (!is_lattice()) throw std::invalid_argument("dual: not a full-rank lattice");
  Mat g(gens_.begin(), gens_.end());
  auto inv = mat_inverse(transpose(g));
  if (!inv) throw std::logic_error("dual: singular basis");
  // Re-canonicalize so that equality-by-basis keeps working.
  return ZModule::from_generators({inv->begin(), inv->end()}, dim_);
}

Vec ZModule::minimal_in_direction(const Vec& l) const {
  if (is_zero_vec(l))
    throw std::invalid_argument("minimal_in_direction: zero vector");
  auto coords = coordinates(l);
  if (!coords) throw std::invalid_argument("minimal_in_direction: not a member");
  mpz_class g = row_gcd(*coords);
  return vscale(QF(mpq_class(1, g)), l);
}

ZModule::Slice ZModule::slice(const QF& y) const {
  if (dim_ < 1) throw std::invalid_argument("slice: dimension 0");
  Slice out;
  // One QF equation in the integer coordinates, rationalized into four
  // integer equations.
  std::vector<Vec> lasts;
  for (const auto& g : gens_) lasts.push_back({g.back()});
  lasts.push_back({y});
  auto [rows, den] = rationalize(lasts, 1);
  ZRow target = rows.back();
  rows.pop_back();

  ZMat kernel = left_kernel(rows);
  std::vector<Vec> kgens;
  for (const auto& k : kernel) {
    Vec full(dim_, QF(0));
    for (size_t i = 0; i < gens_.size(); ++i)
      if (k[i] != 0) full = vadd(full, vscale(QF(mpz_class(k[i])), gens_[i]));
    full.pop_back();
    kgens.push_back(std::move(full));
  }
  out.module = ZModule::from_generators(kgens, dim_ - 1);

  auto sol = solve_left(rows, target);
  if (!sol) return out;
  out.nonempty = true;
  if (y.is_zero()) {
    out.x0.assign(dim_ - 1, QF(0));
  } else {
    Vec full(dim_, QF(0));
    for (size_t i = 0; i < gens_.size(); ++i)
      if ((*sol)[i] != 0)
        full = vadd(full, vscale(QF(mpz_class((*sol)[i])), gens_[i]));
    full.pop_back();
    out.x0 = std::move(full);
  }
  return out;
}

ZModule ZModule::project() const {
  std::vector<Vec> proj;
  for (const auto& g : gens_) {
    Vec p(g.begin(), g.end() - 1);
    proj.push_back(std::move(p));
  }
  return ZModule::from_generators(proj, dim_ - 1);
}

std::optional<std::pair<QF, std::vector<mpz_class>>> ZModule::minimal_vertical()
    const {
  std::vector<Vec> horiz;
  for (const auto& g : gens_) {
    Vec p(g.begin(), g.end() - 1);
    horiz.push_back(std::move(p));
  }
  auto [rows, den] = rationalize(horiz, dim_ - 1);
  ZMat kernel = left_kernel(rows);
  if (kernel.empty()) return std::nullopt;
  if (kernel.size() > 1)
    throw std::logic_error("minimal_vertical: vertical subgroup not discrete");
  ZRow k = kernel[0];
  QF b;
  for (size_t i = 0; i < gens_.size(); ++i)
    if (k[i] != 0) b += QF(mpz_class(k[i])) * gens_[i].back();
  if (b.is_zero()) throw std::logic_error("minimal_vertical: zero kernel image");
  if (b.sign() < 0) {
    for (auto& x : k) x = -x;
    b = -b;
  }
  return std::make_pair(b, std::vector<mpz_class>(k.begin(), k.end()));
}

bool ZModule::is_integral() const {
  auto integral = [](const QF& q) {
    return q.is_rational() && q.c1().get_den() == 1;
  };
  for (size_t i = 0; i < gens_.size(); ++i) {
    for (size_t j = i; j < gens_.size(); ++j) {
      QF g = dot(gens_[i], gens_[j]);
      if (i == j) {
        if (!integral(g)) return false;
      } else {
        if (!integral(g + g)) return false;
      }
    }
  }
  return true;
}

}  // namespace latscope
