#include "dido/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "dido/errors.hpp"

namespace dido {

namespace {

// In-place lower Cholesky; false on a non-positive or non-finite pivot.
bool cholesky(SquareMatrix& a) {
  const std::size_t n = a.size();
  for (std::size_t j = 0; j < n; ++j) {
    double d = a.at(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= a.at(j, k) * a.at(j, k);
    if (!(d > 0.0) || !std::isfinite(d)) return false;
    const double root = std::sqrt(d);
    a.at(j, j) = root;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a.at(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= a.at(i, k) * a.at(j, k);
      a.at(i, j) = s / root;
    }
  }
  return true;
}

std::vector<double> cholesky_solve(const SquareMatrix& chol, std::span<const double> rhs) {
  const std::size_t n = chol.size();
  std::vector<double> x(rhs.begin(), rhs.end());
  for (std::size_t i = 0; i < n; ++i) {
    double s = x[i];
    for (std::size_t k = 0; k < i; ++k) s -= chol.at(i, k) * x[k];
    x[i] = s / chol.at(i, i);
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = x[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= chol.at(k, i) * x[k];
    x[i] = s / chol.at(i, i);
  }
  return x;
}

}  // namespace

std::vector<double> solve_spd(const SquareMatrix& sigma, std::span<const double> rhs,
                              double ridge, SolveInfo* info) {
  const std::size_t n = sigma.size();
  if (rhs.size() != n) throw ShapeMismatch("solve_spd: rhs length does not match matrix size");
  if (ridge < 0.0) throw PreconditionViolated("solve_spd: ridge must be non-negative");
  if (info != nullptr) *info = SolveInfo{};

  double diag_scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) diag_scale = std::max(diag_scale, std::abs(sigma.at(i, i)));

  // Jitter rescue applies only to the plain ridge = 0 solve.
  const double extra[] = {0.0, 1e-10 * diag_scale, 1e-8 * diag_scale};
  const std::size_t attempts = (ridge == 0.0) ? 3 : 1;
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    if (attempt > 0 && extra[attempt] <= extra[attempt - 1]) continue;
    SquareMatrix work = sigma;
    for (std::size_t i = 0; i < n; ++i) work.at(i, i) += ridge + extra[attempt];
    if (cholesky(work)) {
      if (attempt > 0 && info != nullptr) {
        info->jittered = true;
        info->jitter = extra[attempt];
      }
      return cholesky_solve(work, rhs);
    }
  }
  throw SingularSystem("normal system is rank deficient (collinear or constant predictors)");
}

std::vector<double> solve_dense(SquareMatrix a, std::vector<double> rhs) {
  const std::size_t n = a.size();
  if (rhs.size() != n) throw ShapeMismatch("solve_dense: rhs length does not match matrix size");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a.at(r, col)) > std::abs(a.at(pivot, col))) pivot = r;
    }
    if (a.at(pivot, col) == 0.0) throw SingularSystem("singular matrix in solve_dense");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(pivot, c), a.at(col, c));
      std::swap(rhs[pivot], rhs[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a.at(r, col) / a.at(col, col);
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = rhs[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a.at(i, k) * x[k];
    x[i] = s / a.at(i, i);
  }
  return x;
}

std::vector<double> ols_fit(std::span<const std::vector<double>> features,
                            std::span<const double> response, SolveInfo* info) {
  const std::size_t n = features.size();
  if (n == 0 || response.size() != n) throw ShapeMismatch("ols_fit: feature/response mismatch");
  const std::size_t p = features.front().size() + 1;  // intercept first

  SquareMatrix xtx(p);
  std::vector<double> xty(p, 0.0);
  std::vector<double> row(p);
  for (std::size_t i = 0; i < n; ++i) {
    if (features[i].size() + 1 != p) throw ShapeMismatch("ols_fit: ragged feature rows");
    row[0] = 1.0;
    std::copy(features[i].begin(), features[i].end(), row.begin() + 1);
    for (std::size_t a = 0; a < p; ++a) {
      xty[a] += row[a] * response[i];
      for (std::size_t b = a; b < p; ++b) xtx.at(a, b) += row[a] * row[b];
    }
  }
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = 0; b < a; ++b) xtx.at(a, b) = xtx.at(b, a);
  }
  return solve_spd(xtx, xty, 0.0, info);
}

}  // namespace dido
