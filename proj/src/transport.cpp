#include "dido/transport.hpp"

#include <cmath>
#include <cstddef>

#include "dido/errors.hpp"

namespace dido {

namespace {

void require_same_base(const TangentMap& a, const TangentMap& b) {
  if (!(a.base().grid() == b.base().grid()) || a.base().values() != b.base().values()) {
    throw BaseMismatch("oplus needs both maps at the identical base measure");
  }
}

}  // namespace

TangentMap::TangentMap(QuantileMeasure base, std::vector<double> displacement)
    : base_(std::move(base)), displacement_(std::move(displacement)) {
  if (displacement_.size() != base_.size()) {
    throw GridMismatch("displacement length does not match the base grid");
  }
  for (double d : displacement_) {
    if (!std::isfinite(d)) throw Error("map displacement must be finite");
  }
}

TangentMap TangentMap::identity(const QuantileMeasure& base) {
  return TangentMap(base, std::vector<double>(base.size(), 0.0));
}

TangentMap optimal_map(const QuantileMeasure& target, const QuantileMeasure& source) {
  if (!(target.grid() == source.grid())) {
    throw GridMismatch("optimal_map needs target and source on one grid");
  }
  std::vector<double> disp(source.size());
  for (std::size_t k = 0; k < disp.size(); ++k) disp[k] = target.value(k) - source.value(k);
  return TangentMap(source, std::move(disp));
}

TangentMap parallel_transport(const TangentMap& map, const QuantileMeasure& new_base) {
  if (!(map.base().grid() == new_base.grid())) {
    throw GridMismatch("parallel transport needs the maps on one grid");
  }
  return TangentMap(new_base, map.displacement());
}

TangentMap oplus(const TangentMap& a, const TangentMap& b) {
  require_same_base(a, b);
  std::vector<double> disp(a.size());
  for (std::size_t k = 0; k < disp.size(); ++k) {
    disp[k] = a.displacement()[k] + b.displacement()[k];
  }
  return TangentMap(a.base(), std::move(disp));
}

TangentMap odot_direct(double alpha, const TangentMap& map) {
  std::vector<double> disp(map.size());
  for (std::size_t k = 0; k < disp.size(); ++k) disp[k] = alpha * map.displacement()[k];
  return TangentMap(map.base(), std::move(disp));
}

TangentMap odot_decomposed(double alpha, const TangentMap& map) {
  const double magnitude = std::abs(alpha);
  const double whole = std::floor(magnitude);
  const double fraction = magnitude - whole;

  // T^s: the map itself, or its inverse (displacement negation) for s = -1.
  std::vector<double> signed_disp = map.displacement();
  if (alpha < 0.0) {
    for (double& d : signed_disp) d = -d;
  }
  const TangentMap signed_map(map.base(), signed_disp);

  // Fractional geodesic component id + a(T^s - id), then whole unit steps.
  TangentMap result = odot_direct(fraction, signed_map);
  for (double step = 0.0; step < whole; step += 1.0) {
    result = oplus(result, signed_map);
  }
  return result;
}

QuantileMeasure pushforward(const TangentMap& map, Mode mode, bool* projected) {
  if (projected != nullptr) *projected = false;
  std::vector<double> q(map.size());
  bool monotone = true;
  for (std::size_t k = 0; k < q.size(); ++k) {
    q[k] = map.base().value(k) + map.displacement()[k];
    if (k > 0 && q[k] < q[k - 1]) monotone = false;
  }
  if (!monotone) {
    if (mode == Mode::strict) {
      throw NotAMeasure("pushforward produced a decreasing quantile sequence");
    }
    q = isotonic_non_decreasing(q);
    if (projected != nullptr) *projected = true;
  }
  return QuantileMeasure(map.base().grid(), std::move(q));
}

// Pool-adjacent-violators for the L2 non-decreasing fit with unit weights.
// Blocks carry (sum, count); merging backwards restores the block-mean order
// invariant after each append.
std::vector<double> isotonic_non_decreasing(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<double> sum(n);
  std::vector<std::size_t> count(n);
  std::size_t blocks = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sum[blocks] = values[i];
    count[blocks] = 1;
    ++blocks;
    while (blocks > 1 &&
           sum[blocks - 2] * static_cast<double>(count[blocks - 1]) >=
               sum[blocks - 1] * static_cast<double>(count[blocks - 2])) {
      sum[blocks - 2] += sum[blocks - 1];
      count[blocks - 2] += count[blocks - 1];
      --blocks;
    }
  }
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t b = 0; b < blocks; ++b) {
    const double mean = sum[b] / static_cast<double>(count[b]);
    out.insert(out.end(), count[b], mean);
  }
  // Division can round adjacent block means onto the wrong side of each
  // other; pin the order exactly.
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] < out[i - 1]) out[i] = out[i - 1];
  }
  return out;
}

}  // namespace dido
