#ifndef DIDO_MEASURES_HPP
#define DIDO_MEASURES_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace dido {

// Monotonicity / positivity policy for operations that can leave the space
// of valid measures. `project` applies isotonic projection to quantile
// sequences; `clamp` floors a Gaussian standard deviation.
enum class Mode { strict, project, clamp };

// Midpoint grid on (0,1): node k is (k + 0.5) / size for k = 0..size-1.
// Every measure entering a joint computation must carry the same grid.
class QuantileGrid {
 public:
  explicit QuantileGrid(std::size_t size);

  std::size_t size() const { return size_; }
  double node(std::size_t k) const {
    return (static_cast<double>(k) + 0.5) / static_cast<double>(size_);
  }
  std::vector<double> nodes() const;

  friend bool operator==(const QuantileGrid&, const QuantileGrid&) = default;

 private:
  std::size_t size_;
};

class GaussianMeasure {
 public:
  GaussianMeasure(double mean, double std);

  double mean() const { return mean_; }
  double std() const { return std_; }

 private:
  double mean_;
  double std_;
};

// A probability measure represented by its quantile function sampled on a
// grid. Values must be finite and non-decreasing.
class QuantileMeasure {
 public:
  QuantileMeasure(QuantileGrid grid, std::vector<double> values);

  const QuantileGrid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  double value(std::size_t k) const { return values_[k]; }
  std::size_t size() const { return values_.size(); }

 private:
  QuantileGrid grid_;
  std::vector<double> values_;
};

// Quantile curve of a Gaussian measure: q_k = mean + std * probit(t_k).
QuantileMeasure gaussian_quantiles(const GaussianMeasure& g, const QuantileGrid& grid);

// Sample mean and standard deviation (divisor N-1). Throws DegenerateSample
// for fewer than two samples or zero variance.
GaussianMeasure estimate_gaussian(std::span<const double> samples);

// Empirical quantiles by linear interpolation between order statistics.
// A single-valued sample yields a point mass and sets *degenerate.
QuantileMeasure estimate_quantile(std::span<const double> samples, const QuantileGrid& grid,
                                  bool* degenerate = nullptr);

// Squared 2-Wasserstein distance: (1/K) sum (q_a - q_b)^2.
double w2_distance(const QuantileMeasure& a, const QuantileMeasure& b);

// Squared 2-Wasserstein distance between Gaussians: (dm)^2 + (dstd)^2.
double w2_gaussian(const GaussianMeasure& a, const GaussianMeasure& b);

// All distances in this toolkit are squared; root on demand.
inline double w2_root(double squared_distance) { return std::sqrt(squared_distance); }

// Frechet barycenter: pointwise quantile average (the 1-D closed form).
QuantileMeasure barycenter(std::span<const QuantileMeasure> measures);
GaussianMeasure barycenter_gaussian(std::span<const GaussianMeasure> measures);

// Mean squared distance to the barycenter.
double frechet_variance(std::span<const QuantileMeasure> measures);
double frechet_variance(std::span<const GaussianMeasure> measures);

}  // namespace dido

#endif  // DIDO_MEASURES_HPP
