#include "latscope/holohedry.hpp"

#include <stdexcept>

namespace latscope {

namespace {

// Smallest nonnegative integer B with B^2 >= bound.
mpz_class int_sqrt_ceil(const QF& bound) {
  mpz_class b = 0;
  while (QF(b) * QF(b) < bound) ++b;
  return b;
}

struct Candidate {
  Vec v;
  QF norm2;
};

// Every nonzero lattice vector with squared length at most nmax.  The
// coefficient box |m_i| <= B_i with B_i^2 >= nmax * (G^{-1})_ii covers all
// of them: m_i = <v, g*_i> and Cauchy-Schwarz bounds it by
// |v| * sqrt((G^{-1})_ii).
std::vector<Candidate> short_vectors(const std::vector<Vec>& gens,
                                     const Mat& gram, const Mat& gram_inv,
                                     const QF& nmax) {
  const int n = static_cast<int>(gens.size());
  std::vector<mpz_class> bound(n);
  for (int i = 0; i < n; ++i)
    bound[i] = int_sqrt_ceil(nmax * gram_inv[i][i]);

  std::vector<Candidate> out;
  std::vector<mpz_class> m(n, 0);
  for (int i = 0; i < n; ++i) m[i] = -bound[i];
  while (true) {
    bool zero = true;
    for (const auto& x : m)
      if (x != 0) zero = false;
    if (!zero) {
      QF norm2;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (m[i] != 0 && m[j] != 0) norm2 += QF(m[i]) * QF(m[j]) * gram[i][j];
      if (norm2 <= nmax) {
        Vec v(gens[0].size(), QF(0));
        for (int i = 0; i < n; ++i)
          if (m[i] != 0) v = vadd(v, vscale(QF(m[i]), gens[i]));
        out.push_back({std::move(v), std::move(norm2)});
      }
    }
    int k = n - 1;
    while (k >= 0 && m[k] == bound[k]) m[k--] = -bound[k];
    if (k < 0) break;
    ++m[k];
  }
  return out;
}

void search(const std::vector<std::vector<const Candidate*>>& options,
            const Mat& gram, std::vector<const Candidate*>& chosen,
            std::vector<Mat>& images) {
  const size_t level = chosen.size();
  if (level == options.size()) {
    Mat u;
    for (const auto* c : chosen) u.push_back(c->v);
    images.push_back(std::move(u));
    return;
  }
  for (const auto* cand : options[level]) {
    bool ok = true;
    for (size_t j = 0; j < level; ++j) {
      if (dot(cand->v, chosen[j]->v) != gram[level][j]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(cand);
    search(options, gram, chosen, images);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Mat> holohedry(const ZModule& L) {
  if (!L.is_lattice())
    throw std::invalid_argument("holohedry: not a full-rank lattice");
  const auto& gens = L.gens();
  const int n = L.rank();

  Mat gram(n, Vec(n, QF(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram[i][j] = dot(gens[i], gens[j]);
  auto gram_inv = mat_inverse(gram);
  if (!gram_inv) throw std::logic_error("holohedry: degenerate Gram matrix");

  QF nmax;
  for (int i = 0; i < n; ++i)
    if (gram[i][i] > nmax) nmax = gram[i][i];
  auto cands = short_vectors(gens, gram, *gram_inv, nmax);

  // Possible images of each basis vector: equal squared length.
  std::vector<std::vector<const Candidate*>> options(n);
  for (int i = 0; i < n; ++i)
    for (const auto& c : cands)
      if (c.norm2 == gram[i][i]) options[i].push_back(&c);

  std::vector<Mat> images;
  std::vector<const Candidate*> chosen;
  search(options, gram, chosen, images);

  // A Gram-preserving endomorphism of a lattice is orthogonal, hence
  // bijective on it; read the matrix off the basis images.
  Mat basis(gens.begin(), gens.end());
  auto basis_inv = mat_inverse(basis);
  std::vector<Mat> out;
  for (const auto& u : images)
    out.push_back(transpose(mat_mul(*basis_inv, u)));
  return out;
}

}  // namespace latscope
