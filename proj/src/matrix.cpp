#include "vacalib/matrix.hpp"

#include <cmath>
#include <numeric>

#include "vacalib/errors.hpp"

namespace vacalib {

double norm1(const Mat& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) col += std::fabs(a(i, j));
    if (col > best) best = col;
  }
  return best;
}

Mat transpose(const Mat& a) {
  Mat t(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t(j, i) = a(i, j);
  return t;
}

LuSolver::LuSolver(const Mat& a, double cond_cap) : n_(a.size()), lu_(a), perm_(n_) {
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  const double a_norm = norm1(a);
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t piv = k;
    double best = std::fabs(lu_(k, k));
    for (std::size_t i = k + 1; i < n_; ++i) {
      double v = std::fabs(lu_(i, k));
      if (v > best) { best = v; piv = i; }
    }
    if (!(best > 0.0))
      throw SingularMatrix("matrix is singular (zero pivot at column " +
                           std::to_string(k) + ")");
    if (piv != k) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(lu_(k, j), lu_(piv, j));
      std::swap(perm_[k], perm_[piv]);
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      lu_(i, k) /= lu_(k, k);
      const double f = lu_(i, k);
      for (std::size_t j = k + 1; j < n_; ++j) lu_(i, j) -= f * lu_(k, j);
    }
  }

  // ||A^-1||_1 from the explicit inverse columns; n is tiny.
  double inv_norm = 0.0;
  for (std::size_t j = 0; j < n_; ++j) {
    std::vector<double> e(n_, 0.0);
    e[j] = 1.0;
    std::vector<double> x = solve_factored(std::move(e));
    double col = 0.0;
    for (double v : x) col += std::fabs(v);
    if (col > inv_norm) inv_norm = col;
  }
  cond_ = a_norm * inv_norm;
  if (!(cond_ <= cond_cap) || !std::isfinite(cond_))
    throw SingularMatrix("matrix too ill-conditioned: cond_1 = " +
                         std::to_string(cond_) + " exceeds cap " +
                         std::to_string(cond_cap));
}

std::vector<double> LuSolver::solve_factored(std::vector<double> b) const {
  std::vector<double> x(n_);
  for (std::size_t i = 0; i < n_; ++i) x[i] = b[perm_[i]];
  for (std::size_t i = 1; i < n_; ++i)
    for (std::size_t j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
  for (std::size_t ii = n_; ii-- > 0;) {
    for (std::size_t j = ii + 1; j < n_; ++j) x[ii] -= lu_(ii, j) * x[j];
    x[ii] /= lu_(ii, ii);
  }
  return x;
}

std::vector<double> LuSolver::solve(std::vector<double> b) const {
  if (b.size() != n_) throw DimensionMismatch("solve: rhs length mismatch");
  return solve_factored(std::move(b));
}

}  // namespace vacalib
