#ifndef DIDO_DATASET_HPP
#define DIDO_DATASET_HPP

#include <string>
#include <vector>

#include "dido/measures.hpp"

namespace dido {

// N samples of p predictor measures plus (optionally) a response measure
// each, all on one grid. Responses may be absent for prediction inputs.
struct QuantileDataset {
  QuantileGrid grid{2};
  std::vector<std::string> names;                        // p predictor labels
  std::vector<std::vector<QuantileMeasure>> predictors;  // N rows of p
  std::vector<QuantileMeasure> responses;                // N or empty

  std::size_t sample_count() const { return predictors.size(); }
  std::size_t predictor_count() const { return names.size(); }
  bool has_responses() const { return !responses.empty(); }

  // Shape and shared-grid checks; `require_responses` for fitting.
  void validate(bool require_responses = true) const;
};

struct GaussianDataset {
  std::vector<std::string> names;
  std::vector<std::vector<GaussianMeasure>> predictors;
  std::vector<GaussianMeasure> responses;

  std::size_t sample_count() const { return predictors.size(); }
  std::size_t predictor_count() const { return names.size(); }
  bool has_responses() const { return !responses.empty(); }

  void validate(bool require_responses = true) const;
};

// Every Gaussian sampled on the grid via gaussian_quantiles.
QuantileDataset to_quantile(const GaussianDataset& data, const QuantileGrid& grid);

}  // namespace dido

#endif  // DIDO_DATASET_HPP
