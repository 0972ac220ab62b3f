#pragma once

#include <cstdint>

namespace halfball {

/// A seeded Monte Carlo estimate. stderr is zero for deterministic values.
struct VolumeEstimate {
  double mean = 0.0;
  double stderr = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::int64_t hits = 0;

  bool zero_hits() const { return samples > 0 && hits == 0; }
  /// |mean - reference| <= k * stderr, up to rounding when every draw hits
  bool covers(double reference, double k = 3.0) const {
    const double d = mean - reference;
    const double r = reference < 0 ? -reference : reference;
    return (d < 0 ? -d : d) <= k * stderr + 1e-12 * r;
  }
};

}  // namespace halfball
