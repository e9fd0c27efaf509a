#pragma once

#include <array>
#include <cstddef>

#include "nbf/core.hpp"

namespace nbf {

enum class BandLabel {
  extremely_fragile,
  fragile,
  moderately_robust,
  robust,
  very_robust,
};

// One row of the interpretation table. Bands are half-open [lower, upper),
// closed on the left, so a boundary value lands in the stronger band.
struct RobustnessBand {
  BandLabel label;
  const char* name;            // snake_case identifier used in reports
  const char* title;           // human-readable band name
  const char* interpretation;  // what the band means
  double lower;                // inclusive
  double upper;                // exclusive (1.0 for the last band)
};

inline constexpr std::array<RobustnessBand, 5> kBands{{
    {BandLabel::extremely_fragile, "extremely_fragile", "Extremely fragile",
     "Near neutrality", 0.00, 0.05},
    {BandLabel::fragile, "fragile", "Fragile", "Slight separation", 0.05,
     0.10},
    {BandLabel::moderately_robust, "moderately_robust", "Moderately robust",
     "Stable separation", 0.10, 0.25},
    {BandLabel::robust, "robust", "Robust", "Strong separation", 0.25, 0.50},
    {BandLabel::very_robust, "very_robust", "Very robust",
     "Far from neutrality", 0.50, 1.00},
}};

// The unique band whose interval contains v. Total on [0, 1) because the
// bands partition the interval with no gaps or overlaps.
inline const RobustnessBand& classify(double v) {
  if (!(v >= 0.0) || !(v < 1.0))
    throw ValidationError("value", "nb must lie in [0, 1)");
  for (std::size_t i = kBands.size(); i-- > 1;) {
    if (v >= kBands[i].lower) return kBands[i];
  }
  return kBands[0];
}

inline const RobustnessBand& classify(const NbValue& nb) {
  return classify(nb.value());
}

}  // namespace nbf
