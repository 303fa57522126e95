#include "latscope/intmat.hpp"

#include <cstddef>
#include <stdexcept>

namespace latscope {

namespace {

void row_axpy(ZRow& dst, const ZRow& src, const mpz_class& k) {
  for (size_t j = 0; j < dst.size(); ++j) dst[j] += k * src[j];
}

void row_negate(ZRow& r) {
  for (auto& x : r) x = -x;
}

mpz_class fdiv(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

mpz_class row_gcd(const ZRow& r) {
  mpz_class g = 0;
  for (const auto& x : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

Hnf row_hnf(const ZMat& a) {
  const size_t m = a.size();
  const size_t n = m == 0 ? 0 : a[0].size();
  Hnf out;
  out.h = a;
  out.u.assign(m, ZRow(m, 0));
  for (size_t i = 0; i < m; ++i) out.u[i][i] = 1;

  size_t r = 0;
  for (size_t j = 0; j < n && r < m; ++j) {
    // Euclidean elimination in column j among rows r..m-1.
    while (true) {
      size_t best = m;
      for (size_t i = r; i < m; ++i) {
        if (out.h[i][j] == 0) continue;
        if (best == m ||
            mpz_cmpabs(out.h[i][j].get_mpz_t(), out.h[best][j].get_mpz_t()) < 0)
          best = i;
      }
      if (best == m) break;  // column is zero below r
      std::swap(out.h[r], out.h[best]);
      std::swap(out.u[r], out.u[best]);
      bool others = false;
      for (size_t i = r + 1; i < m; ++i) {
        if (out.h[i][j] == 0) continue;
        mpz_class q = fdiv(out.h[i][j], out.h[r][j]);
        row_axpy(out.h[i], out.h[r], -q);
        row_axpy(out.u[i], out.u[r], -q);
        if (out.h[i][j] != 0) others = true;
      }
      if (!others) break;
    }
    if (out.h[r][j] == 0) continue;
    if (out.h[r][j] < 0) {
      row_negate(out.h[r]);
      row_negate(out.u[r]);
    }
    for (size_t i = 0; i < r; ++i) {
      mpz_class q = fdiv(out.h[i][j], out.h[r][j]);
      if (q != 0) {
        row_axpy(out.h[i], out.h[r], -q);
        row_axpy(out.u[i], out.u[r], -q);
      }
    }
    out.pivot_cols.push_back(static_cast<int>(j));
    ++r;
  }
  out.rank = static_cast<int>(r);
  return out;
}

std::optional<ZRow> solve_left(const ZMat& a, const ZRow& t) {
  const size_t m = a.size();
  if (m == 0) {
    for (const auto& x : t)
      if (x != 0) return std::nullopt;
    return ZRow{};
  }
  Hnf f = row_hnf(a);
  ZRow residual = t;
  ZRow w(m, 0);
  for (int i = 0; i < f.rank; ++i) {
    int j = f.pivot_cols[i];
    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), residual[j].get_mpz_t(),
                f.h[i][j].get_mpz_t());
    if (rem != 0) return std::nullopt;
    w[i] = q;
    if (q != 0) row_axpy(residual, f.h[i], -q);
  }
  for (const auto& x : residual)
    if (x != 0) return std::nullopt;
  ZRow x(m, 0);
  for (int i = 0; i < f.rank; ++i) {
    if (w[i] != 0) row_axpy(x, f.u[i], w[i]);
  }
  return x;
}

ZMat left_kernel(const ZMat& a) {
  Hnf f = row_hnf(a);
  ZMat out;
  for (size_t i = f.rank; i < a.size(); ++i) out.push_back(f.u[i]);
  return out;
}

ZMat unimodular_with_first_row(const ZRow& u) {
  const size_t n = u.size();
  if (n == 0) throw std::invalid_argument("empty row");
  ZRow v = u;
  ZMat w(n, ZRow(n, 0));
  for (size_t i = 0; i < n; ++i) w[i][i] = 1;

  // Column operations drive v to a unit vector; w accumulates the inverse
  // transform, so its first row ends up equal to u.
  while (true) {
    size_t piv = n, nonzeros = 0;
    for (size_t i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      ++nonzeros;
      if (piv == n || mpz_cmpabs(v[i].get_mpz_t(), v[piv].get_mpz_t()) < 0)
        piv = i;
    }
    if (nonzeros <= 1) break;
    for (size_t j = 0; j < n; ++j) {
      if (j == piv || v[j] == 0) continue;
      mpz_class q = fdiv(v[j], v[piv]);
      if (q != 0) {
        v[j] -= q * v[piv];
        row_axpy(w[piv], w[j], q);
      }
    }
  }
  size_t piv = 0;
  while (piv < n && v[piv] == 0) ++piv;
  if (piv == n || (v[piv] != 1 && v[piv] != -1))
    throw std::invalid_argument("row is not primitive");
  if (v[piv] < 0) row_negate(w[piv]);
  if (piv != 0) std::swap(w[0], w[piv]);
  return w;
}

}  // namespace latscope
