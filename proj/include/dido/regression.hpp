#ifndef DIDO_REGRESSION_HPP
#define DIDO_REGRESSION_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dido/dataset.hpp"
#include "dido/linalg.hpp"
#include "dido/transport.hpp"

namespace dido {

struct FitDiagnostics {
  double r2 = 0.0;
  double adjusted_r2 = 0.0;
  double residual_variance = 0.0;  // mean squared residual W2 distance
  std::size_t projected_count = 0;
  bool jittered = false;
  bool degenerate_response = false;
  std::vector<std::string> warnings;
};

// Fitted free-shape model: coefficients plus the barycenters the map
// arithmetic is anchored at.
struct DidoModel {
  std::vector<double> alpha;
  std::vector<std::string> names;
  std::vector<QuantileMeasure> pred_barycenters;
  QuantileMeasure resp_barycenter;
  FitDiagnostics diagnostics;

  const QuantileGrid& grid() const { return resp_barycenter.grid(); }
};

struct FitOptions {
  double ridge = 0.0;
  Mode mode = Mode::project;    // recorded for downstream prediction defaults
  bool standardize = false;     // solve in per-predictor Frechet-sd units
};

// Sample Wasserstein covariance of two families of displacement profiles:
// (1/N) sum_i (1/K) sum_k a[i][k] * b[i][k].
double wasserstein_cov(std::span<const std::vector<double>> a,
                       std::span<const std::vector<double>> b);

// Displacement profiles of a dataset relative to its barycenters, carried
// to the tangent space at the response barycenter.
struct DisplacementProfiles {
  std::vector<QuantileMeasure> pred_barycenters;
  QuantileMeasure resp_barycenter;
  std::vector<std::vector<std::vector<double>>> predictor;  // p x N x K
  std::vector<std::vector<double>> response;                // N x K
};
DisplacementProfiles displacement_profiles(const QuantileDataset& data);

struct NormalSystem {
  SquareMatrix sigma;
  std::vector<double> c;
};
NormalSystem build_normal_system(const QuantileDataset& data);

// Frechet least-squares fit: alpha solves (Sigma + ridge*I) alpha = C.
DidoModel fit(const QuantileDataset& data, const FitOptions& options = {});

// Prediction: response barycenter pushed through id + sum_j alpha_j
// (T_{mu_j || resp_barycenter} - id).
QuantileMeasure predict(const DidoModel& model, std::span<const QuantileMeasure> predictors,
                        Mode mode = Mode::project, bool* projected = nullptr);

// Residual transport map (based at the prediction) and the squared
// residual distance d2_W(response, prediction).
std::pair<TangentMap, double> residual_map(const DidoModel& model,
                                           std::span<const QuantileMeasure> predictors,
                                           const QuantileMeasure& response,
                                           Mode mode = Mode::project);

// R2 = 1 - sum d2_W(nu_i, nu_hat_i) / sum d2_W(nu_i, nu_bar). A degenerate
// response (zero total variation) reports 1.0 and sets *degenerate.
double r_squared(const DidoModel& model, const QuantileDataset& data, bool* degenerate = nullptr);
double adjusted_r_squared(const DidoModel& model, const QuantileDataset& data);

// The Frechet least-squares objective (1/2N) sum_i d2_W(nu_i, nu_hat_i(alpha))
// over raw (unprojected) predictions, and its analytic gradient
// Sigma * alpha - C.
double frechet_ls_objective(const DisplacementProfiles& profiles, std::span<const double> alpha);
std::vector<double> frechet_ls_gradient(const DisplacementProfiles& profiles,
                                        std::span<const double> alpha);

}  // namespace dido

#endif  // DIDO_REGRESSION_HPP
