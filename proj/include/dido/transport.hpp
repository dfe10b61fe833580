#ifndef DIDO_TRANSPORT_HPP
#define DIDO_TRANSPORT_HPP

#include <span>
#include <vector>

#include "dido/measures.hpp"

namespace dido {

// An optimal transport map expressed in quantile coordinates at a base
// measure: displacement[k] is T(q_base[k]) - q_base[k]. The identity map has
// zero displacement. Stored this way, parallel transport, addition and
// scalar multiplication of maps reduce to plain displacement arithmetic.
class TangentMap {
 public:
  TangentMap(QuantileMeasure base, std::vector<double> displacement);

  static TangentMap identity(const QuantileMeasure& base);

  const QuantileMeasure& base() const { return base_; }
  const std::vector<double>& displacement() const { return displacement_; }
  std::size_t size() const { return displacement_.size(); }

 private:
  QuantileMeasure base_;
  std::vector<double> displacement_;
};

// Map transporting `source` onto `target`, based at `source`:
// displacement = q_target - q_source.
TangentMap optimal_map(const QuantileMeasure& target, const QuantileMeasure& source);

// Re-base a map to the tangent space at `new_base`. In quantile coordinates
// the displacement profile is carried over unchanged.
TangentMap parallel_transport(const TangentMap& map, const QuantileMeasure& new_base);

// Addition of maps at the identical base: displacements add. Commutative;
// the identity map is neutral.
TangentMap oplus(const TangentMap& a, const TangentMap& b);

// Scalar multiplication, closed form: displacement scales by alpha.
TangentMap odot_direct(double alpha, const TangentMap& map);

// Scalar multiplication built from its geodesic decomposition
// alpha = s(a + b): one fractional component id + a(T^s - id) oplus b unit
// components T^s, where T^{-1} negates the displacement. Agrees with
// odot_direct up to floating-point accumulation.
TangentMap odot_decomposed(double alpha, const TangentMap& map);

// Apply the map to its base: q_base + displacement. A non-monotone result
// raises NotAMeasure in strict mode; project mode applies isotonic
// projection and sets *projected.
QuantileMeasure pushforward(const TangentMap& map, Mode mode = Mode::project,
                            bool* projected = nullptr);

// L2 isotonic (non-decreasing) projection, pool-adjacent-violators.
std::vector<double> isotonic_non_decreasing(std::span<const double> values);

}  // namespace dido

#endif  // DIDO_TRANSPORT_HPP
