#ifndef VACALIB_MATRIX_HPP
#define VACALIB_MATRIX_HPP

#include <cstddef>
#include <vector>

namespace vacalib {

// Small dense square matrix, row-major. Everything in this project is a
// C x C matrix with C <= 64, so no sparsity or blocking.
class Mat {
 public:
  Mat() = default;
  explicit Mat(std::size_t n, double fill = 0.0) : n_(n), v_(n * n, fill) {}

  static Mat identity(std::size_t n) {
    Mat m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return v_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return v_[i * n_ + j]; }

  std::vector<double> row(std::size_t i) const {
    return std::vector<double>(v_.begin() + i * n_, v_.begin() + (i + 1) * n_);
  }
  void set_row(std::size_t i, const std::vector<double>& r) {
    for (std::size_t j = 0; j < n_; ++j) v_[i * n_ + j] = r[j];
  }

  const std::vector<double>& data() const { return v_; }
  std::vector<double>& data() { return v_; }

  bool operator==(const Mat& o) const { return n_ == o.n_ && v_ == o.v_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> v_;
};

// Partial-pivot LU factorization with an exact 1-norm condition number
// (cheap at these sizes: the inverse norm is obtained by n unit solves).
class LuSolver {
 public:
  // Throws SingularMatrix on a zero pivot or when cond_1 exceeds cond_cap.
  LuSolver(const Mat& a, double cond_cap);

  std::vector<double> solve(std::vector<double> b) const;
  double condition() const { return cond_; }

 private:
  std::vector<double> solve_factored(std::vector<double> b) const;

  std::size_t n_ = 0;
  Mat lu_;
  std::vector<std::size_t> perm_;
  double cond_ = 0.0;
};

double norm1(const Mat& a);
Mat transpose(const Mat& a);

}  // namespace vacalib

#endif
