#ifndef VACALIB_CORE_HPP
#define VACALIB_CORE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vacalib/cause_set.hpp"
#include "vacalib/matrix.hpp"

namespace vacalib {

// Construction tolerances for probability vectors. Sums within kSimplexTol of
// 1 pass as-is; deviations up to kSimplexRenormTol are renormalized with a
// warning; anything larger is a data error.
inline constexpr double kSimplexTol = 1e-9;
inline constexpr double kSimplexRenormTol = 1e-6;

// Nonnegative vector summing to 1.
class SimplexVec {
 public:
  explicit SimplexVec(std::vector<double> values);
  static SimplexVec uniform(std::size_t dim);
  static SimplexVec unit(std::size_t dim, std::size_t index);

  std::size_t size() const { return v_.size(); }
  double operator[](std::size_t i) const { return v_[i]; }
  const std::vector<double>& values() const { return v_; }

  bool operator==(const SimplexVec& o) const { return v_ == o.v_; }

 private:
  std::vector<double> v_;
};

// Row-stochastic misclassification matrix: entry (i, j) is the probability
// the classifier assigns cause j when the true cause is i.
class MissMat {
 public:
  MissMat(Mat matrix, CauseSet causes);

  std::size_t dim() const { return m_.size(); }
  const Mat& matrix() const { return m_; }
  const CauseSet& causes() const { return causes_; }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  std::vector<double> row(std::size_t i) const { return m_.row(i); }

 private:
  Mat m_;
  CauseSet causes_;
};

// Intrinsic accuracy per cause plus the pull vector (systematic preference
// when the designed match fails).
struct BaseModelParams {
  std::vector<double> accuracy;  // a_i in [0, 1]
  SimplexVec pull;               // rho

  BaseModelParams(std::vector<double> accuracy_in, SimplexVec pull_in);
};

// Labeled misclassification counts for one country: entry (i, j) is the
// number of deaths with true cause i assigned cause j.
class CountMatrix {
 public:
  CountMatrix(std::vector<std::vector<long long>> counts, CauseSet causes,
              std::string country);

  std::size_t dim() const { return causes_.size(); }
  long long at(std::size_t i, std::size_t j) const { return counts_[i][j]; }
  long long row_total(std::size_t i) const;
  long long total() const;
  const CauseSet& causes() const { return causes_; }
  const std::string& country() const { return country_; }

 private:
  std::vector<std::vector<long long>> counts_;
  CauseSet causes_;
  std::string country_;
};

// Per-row Dirichlet concentration parameters for an uncertainty-quantified
// matrix prior.
class DirichletRows {
 public:
  DirichletRows(Mat scale, CauseSet causes);

  std::size_t dim() const { return scale_.size(); }
  const Mat& scale() const { return scale_; }
  const CauseSet& causes() const { return causes_; }
  // Row-normalized scales: the mean matrix of the implied prior.
  MissMat mean_matrix() const;

 private:
  Mat scale_;
  CauseSet causes_;
};

// Zeroes the inactive columns and renormalizes each row over the active
// ones. Throws RowDegenerate (naming the row) when a row has no active mass.
MissMat normalize_rows(const Mat& m, const std::vector<bool>& active,
                       const CauseSet& causes);

// q = Phi^T p: the assigned-cause distribution induced by a true-cause
// distribution.
SimplexVec apply_calibration(const MissMat& phi, const SimplexVec& p);

// Solves Phi^T x = q. The result is generally NOT a simplex; callers check.
std::vector<double> solve_inverse(const MissMat& phi, const SimplexVec& q,
                                  double cond_cap = 1e12);

}  // namespace vacalib

#endif
