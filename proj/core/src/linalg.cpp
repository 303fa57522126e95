#include "latscope/linalg.hpp"

#include <cstddef>
#include <stdexcept>

namespace latscope {

Vec vadd(const Vec& x, const Vec& y) {
  Vec r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

Vec vsub(const Vec& x, const Vec& y) {
  Vec r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

Vec vneg(const Vec& x) {
  Vec r = x;
  for (auto& c : r) c = -c;
  return r;
}

Vec vscale(const QF& s, const Vec& x) {
  Vec r = x;
  for (auto& c : r) c *= s;
  return r;
}

bool is_zero_vec(const Vec& x) {
  for (const auto& c : x)
    if (!c.is_zero()) return false;
  return true;
}

QF dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: size mismatch");
  QF s;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Mat identity_mat(int n) {
  Mat a(n, Vec(n, QF(0)));
  for (int i = 0; i < n; ++i) a[i][i] = QF(1);
  return a;
}

Mat transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat t(a[0].size(), Vec(a.size(), QF(0)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  const size_t m = a.size(), k = b.size(), n = b.empty() ? 0 : b[0].size();
  Mat c(m, Vec(n, QF(0)));
  for (size_t i = 0; i < m; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

Vec mat_vec(const Mat& a, const Vec& x) {
  Vec r(a.size(), QF(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
  return r;
}

namespace {

// Row echelon elimination in place; returns pivot (row, col) pairs.
std::vector<std::pair<int, int>> echelon(Mat& a) {
  std::vector<std::pair<int, int>> pivots;
  const int m = static_cast<int>(a.size());
  const int n = m == 0 ? 0 : static_cast<int>(a[0].size());
  int r = 0;
  for (int j = 0; j < n && r < m; ++j) {
    int p = -1;
    for (int i = r; i < m; ++i) {
      if (!a[i][j].is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    QF inv = a[r][j].inverse();
    for (int jj = j; jj < n; ++jj) a[r][jj] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || a[i][j].is_zero()) continue;
      QF f = a[i][j];
      for (int jj = j; jj < n; ++jj) a[i][jj] -= f * a[r][jj];
    }
    pivots.emplace_back(r, j);
    ++r;
  }
  return pivots;
}

}  // namespace

int mat_rank(Mat a) { return static_cast<int>(echelon(a).size()); }

std::optional<Vec> solve_linear(Mat a, Vec b) {
  const size_t m = a.size();
  if (b.size() != m) throw std::invalid_argument("solve_linear: size mismatch");
  const size_t n = m == 0 ? 0 : a[0].size();
  for (size_t i = 0; i < m; ++i) a[i].push_back(b[i]);
  auto pivots = echelon(a);
  // Inconsistency: a pivot in the augmented column.
  for (auto [r, c] : pivots)
    if (c == static_cast<int>(n)) return std::nullopt;
  Vec x(n, QF(0));
  for (auto [r, c] : pivots) x[c] = a[r][n];
  return x;
}

std::optional<Mat> mat_inverse(const Mat& a) {
  const int n = static_cast<int>(a.size());
  Mat aug = a;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n)
      throw std::invalid_argument("mat_inverse: not square");
    for (int j = 0; j < n; ++j) aug[i].push_back(QF(i == j ? 1 : 0));
  }
  auto pivots = echelon(aug);
  if (static_cast<int>(pivots.size()) != n) return std::nullopt;
  for (auto [r, c] : pivots)
    if (c >= n) return std::nullopt;
  Mat inv(n, Vec(n, QF(0)));
  for (auto [r, c] : pivots)
    for (int j = 0; j < n; ++j) inv[c][j] = aug[r][n + j];
  return inv;
}

bool is_orthogonal(const Mat& a) {
  const size_t n = a.size();
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) return false;
    for (size_t j = 0; j < n; ++j) {
      QF d = dot(a[i], a[j]);
      if (d != QF(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace latscope
