#pragma once

#include <cstdint>

#include "octa/forms.hpp"

namespace octa {

/// Lobachevsky function L(x) = -int_0^x log|2 sin t| dt. Odd and pi-periodic.
double lobachevsky(double x);

/// L(d1/2) + L(d2/2) + L(d3/2).
double tetrahedron_volume(const ConeDeficits& d);

struct MonteCarloOptions {
  std::uint64_t samples = 10'000'000;
  std::uint64_t seed = 0;
  double truncation = 1e-3; // discard samples with r^2 > 1 - truncation
  unsigned workers = 1;
};

struct VolumeEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double truncation = 0.0;
  /// The same samples re-weighted with truncation / 2, to expose the bias
  /// from cutting off the ideal vertices.
  double value_half_truncation = 0.0;
  double std_error_half_truncation = 0.0;
};

/// Samples per independent random stream; shards are the unit of parallel work.
inline constexpr std::uint64_t kMonteCarloShardSize = 65536;

/// Hyperbolic volume of the ideal tetrahedron by uniform sampling of its
/// Klein-model image, weighting each point by (1 - r^2)^-2. The result depends
/// only on (deficits, samples, seed, truncation), never on `workers`.
/// Throws Error{BadSampleCount} for samples < 10^4 and Error{BadTruncation}
/// unless truncation is in (0, 0.1].
VolumeEstimate monte_carlo_volume(const ConeDeficits& d, const MonteCarloOptions& options);

} // namespace octa
