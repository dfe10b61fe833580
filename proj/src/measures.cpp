#include "dido/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dido/errors.hpp"
#include "dido/normal.hpp"

namespace dido {

namespace {

void require_same_grid(const QuantileMeasure& a, const QuantileMeasure& b) {
  if (!(a.grid() == b.grid())) {
    throw GridMismatch("quantile grids differ: " + std::to_string(a.grid().size()) + " vs " +
                       std::to_string(b.grid().size()) + " nodes");
  }
}

}  // namespace

QuantileGrid::QuantileGrid(std::size_t size) : size_(size) {
  if (size < 2) throw Error("quantile grid needs at least 2 nodes");
}

std::vector<double> QuantileGrid::nodes() const {
  std::vector<double> out(size_);
  for (std::size_t k = 0; k < size_; ++k) out[k] = node(k);
  return out;
}

GaussianMeasure::GaussianMeasure(double mean, double std) : mean_(mean), std_(std) {
  if (!(std > 0.0) || !std::isfinite(std) || !std::isfinite(mean)) {
    throw NotAMeasure("Gaussian measure needs finite mean and std > 0");
  }
}

QuantileMeasure::QuantileMeasure(QuantileGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw GridMismatch("quantile value count does not match grid size");
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k])) throw NotAMeasure("quantile values must be finite");
    if (k > 0 && values_[k] < values_[k - 1]) {
      throw NotAMeasure("quantile values must be non-decreasing (node " + std::to_string(k) + ")");
    }
  }
}

QuantileMeasure gaussian_quantiles(const GaussianMeasure& g, const QuantileGrid& grid) {
  std::vector<double> q(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    q[k] = g.mean() + g.std() * probit(grid.node(k));
  }
  return QuantileMeasure(grid, std::move(q));
}

GaussianMeasure estimate_gaussian(std::span<const double> samples) {
  if (samples.size() < 2) throw DegenerateSample("need at least 2 samples");
  const double n = static_cast<double>(samples.size());
  const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : samples) ss += (x - mean) * (x - mean);
  const double var = ss / (n - 1.0);
  if (!(var > 0.0)) throw DegenerateSample("zero sample variance");
  return GaussianMeasure(mean, std::sqrt(var));
}

QuantileMeasure estimate_quantile(std::span<const double> samples, const QuantileGrid& grid,
                                  bool* degenerate) {
  if (samples.size() < 2) throw DegenerateSample("need at least 2 samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  if (degenerate != nullptr) *degenerate = (sorted.front() == sorted.back());

  // Linear interpolation between order statistics at rank (n-1)*t.
  const std::size_t n = sorted.size();
  std::vector<double> q(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double h = static_cast<double>(n - 1) * grid.node(k);
    const std::size_t lo = static_cast<std::size_t>(h);
    const double frac = h - static_cast<double>(lo);
    q[k] = (lo + 1 < n) ? sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]) : sorted[n - 1];
  }
  return QuantileMeasure(grid, std::move(q));
}

double w2_distance(const QuantileMeasure& a, const QuantileMeasure& b) {
  require_same_grid(a, b);
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a.value(k) - b.value(k);
    acc += d * d;
  }
  return acc / static_cast<double>(a.size());
}

double w2_gaussian(const GaussianMeasure& a, const GaussianMeasure& b) {
  const double dm = a.mean() - b.mean();
  const double ds = a.std() - b.std();
  return dm * dm + ds * ds;
}

QuantileMeasure barycenter(std::span<const QuantileMeasure> measures) {
  if (measures.empty()) throw EmptyInput("barycenter of no measures");
  const QuantileGrid grid = measures.front().grid();
  std::vector<double> avg(grid.size(), 0.0);
  for (const auto& m : measures) {
    require_same_grid(measures.front(), m);
    for (std::size_t k = 0; k < grid.size(); ++k) avg[k] += m.value(k);
  }
  const double n = static_cast<double>(measures.size());
  for (double& v : avg) v /= n;
  return QuantileMeasure(grid, std::move(avg));
}

GaussianMeasure barycenter_gaussian(std::span<const GaussianMeasure> measures) {
  if (measures.empty()) throw EmptyInput("barycenter of no measures");
  double mean = 0.0;
  double std = 0.0;
  for (const auto& m : measures) {
    mean += m.mean();
    std += m.std();
  }
  const double n = static_cast<double>(measures.size());
  return GaussianMeasure(mean / n, std / n);
}

double frechet_variance(std::span<const QuantileMeasure> measures) {
  const QuantileMeasure center = barycenter(measures);
  double acc = 0.0;
  for (const auto& m : measures) acc += w2_distance(m, center);
  return acc / static_cast<double>(measures.size());
}

double frechet_variance(std::span<const GaussianMeasure> measures) {
  const GaussianMeasure center = barycenter_gaussian(measures);
  double acc = 0.0;
  for (const auto& m : measures) acc += w2_gaussian(m, center);
  return acc / static_cast<double>(measures.size());
}

}  // namespace dido
