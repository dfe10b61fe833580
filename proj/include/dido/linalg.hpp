#ifndef DIDO_LINALG_HPP
#define DIDO_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace dido {

// Dense square matrix, row-major. Sized for the small normal systems this
// toolkit produces (p predictors, a few dozen at most).
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const std::vector<double>& data() const { return a_; }

 private:
  std::size_t n_;
  std::vector<double> a_;
};

struct SolveInfo {
  bool jittered = false;
  double jitter = 0.0;
};

// Solves (sigma + ridge*I) x = rhs by Cholesky factorization. If the
// factorization fails at ridge 0, retries with jitter 1e-10*max|diag| and
// then 1e-8*max|diag|, flagging the rescue in `info`; throws SingularSystem
// after that.
std::vector<double> solve_spd(const SquareMatrix& sigma, std::span<const double> rhs,
                              double ridge = 0.0, SolveInfo* info = nullptr);

// Gaussian elimination with partial pivoting. Used where an independent
// route beside the Cholesky path is wanted.
std::vector<double> solve_dense(SquareMatrix a, std::vector<double> rhs);

// Ordinary least squares with an intercept: rows of `features` are
// observations, returns (intercept, slopes...) of length 1 + n_features.
// Normal equations solved through solve_spd (same jitter policy).
std::vector<double> ols_fit(std::span<const std::vector<double>> features,
                            std::span<const double> response, SolveInfo* info = nullptr);

}  // namespace dido

#endif  // DIDO_LINALG_HPP
