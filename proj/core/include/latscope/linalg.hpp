#pragma once

#include <optional>
#include <vector>

#include "latscope/qf.hpp"

namespace latscope {

using Vec = std::vector<QF>;
using Mat = std::vector<Vec>;

Vec vadd(const Vec& x, const Vec& y);
Vec vsub(const Vec& x, const Vec& y);
Vec vneg(const Vec& x);
Vec vscale(const QF& s, const Vec& x);
bool is_zero_vec(const Vec& x);
QF dot(const Vec& x, const Vec& y);

Mat identity_mat(int n);
Mat transpose(const Mat& a);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& a, const Vec& x);  // a acting on a column vector

int mat_rank(Mat a);
/// Solves a * x = b exactly; free variables are set to zero.  Empty when
/// the system is inconsistent.
std::optional<Vec> solve_linear(Mat a, Vec b);
std::optional<Mat> mat_inverse(const Mat& a);
bool is_orthogonal(const Mat& a);

}  // namespace latscope
