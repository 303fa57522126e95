#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace latscope {

using ZRow = std::vector<mpz_class>;
using ZMat = std::vector<ZRow>;

/// Row-style Hermite normal form.  h = u * a with u unimodular; the first
/// `rank` rows of h are the canonical basis of the row module of a (pivots
/// positive, entries above each pivot reduced into [0, pivot)), the
/// remaining rows are zero.
struct Hnf {
  ZMat h;
  ZMat u;
  int rank = 0;
  std::vector<int> pivot_cols;  // one per nonzero row of h
};

Hnf row_hnf(const ZMat& a);

/// Solves x * a = t over the integers; empty when no integral solution.
std::optional<ZRow> solve_left(const ZMat& a, const ZRow& t);

/// Basis of { x : x * a = 0 } as rows.
ZMat left_kernel(const ZMat& a);

/// A unimodular matrix whose first row is the given primitive vector
/// (gcd of entries 1).  Throws std::invalid_argument otherwise.
ZMat unimodular_with_first_row(const ZRow& u);

mpz_class row_gcd(const ZRow& r);

}  // namespace latscope
