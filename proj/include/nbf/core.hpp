#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "nbf/errors.hpp"

namespace nbf {

// Statistical context a neutrality-boundary value was computed in.
enum class Domain {
  general,
  binary_2x2,
  contingency_rxc,
  anova,
  correlation,
};

const char* to_string(Domain d) noexcept;

// An observed contrast: effect value, its neutrality reference, and the
// positive scale parameter that normalizes the distance between them.
class Contrast {
 public:
  Contrast(double delta, double delta0, double scale)
      : delta_(delta), delta0_(delta0), scale_(scale) {
    if (!std::isfinite(delta_))
      throw ValidationError("delta", "must be finite");
    if (!std::isfinite(delta0_))
      throw ValidationError("delta0", "must be finite");
    if (!std::isfinite(scale_) || !(scale_ > 0.0))
      throw ValidationError("scale", "must be finite and > 0");
  }

  double delta() const noexcept { return delta_; }
  double delta0() const noexcept { return delta0_; }
  double scale() const noexcept { return scale_; }

 private:
  double delta_;
  double delta0_;
  double scale_;
};

// A validated neutrality-boundary value in [0, 1). Construction rejects
// anything outside the half-open interval, so a formula that saturates to
// 1.0 surfaces as an error instead of a silently clamped result.
class NbValue {
 public:
  NbValue(double value, Domain domain, std::string metric_name)
      : value_(value), domain_(domain), metric_name_(std::move(metric_name)) {
    if (!(value_ >= 0.0) || !(value_ < 1.0))
      throw ValidationError("value", "nb must lie in [0, 1), got " +
                                         std::to_string(value_));
  }

  double value() const noexcept { return value_; }
  Domain domain() const noexcept { return domain_; }
  const std::string& metric_name() const noexcept { return metric_name_; }

 private:
  double value_;
  Domain domain_;
  std::string metric_name_;
};

namespace detail {

// x / (1 + x) on raw scalars. Expects x >= 0; an overflowed or NaN x maps
// to 1.0, which NbValue construction then rejects.
template <typename Scalar>
Scalar canonical01(Scalar x) {
  if (!std::isfinite(x)) return Scalar(1);
  return x / (Scalar(1) + x);
}

}  // namespace detail

// Normalized distance |delta - delta0| / (|delta - delta0| + scale).
// Zero exactly when delta equals delta0; always below 1.
inline NbValue nb_general(const Contrast& contrast) {
  const double dist = std::fabs(contrast.delta() - contrast.delta0());
  return NbValue(detail::canonical01(dist / contrast.scale()), Domain::general,
                 "nb_general");
}

// The map x -> x/(1+x), taking [0, inf) onto [0, 1).
inline NbValue canonical_transform(double x) {
  if (!std::isfinite(x) || x < 0.0)
    throw ValidationError("x", "must be finite and >= 0");
  return NbValue(detail::canonical01(x), Domain::general, "canonical");
}

inline const char* to_string(Domain d) noexcept {
  switch (d) {
    case Domain::general: return "general";
    case Domain::binary_2x2: return "binary_2x2";
    case Domain::contingency_rxc: return "contingency_rxc";
    case Domain::anova: return "anova";
    case Domain::correlation: return "correlation";
  }
  return "unknown";
}

}  // namespace nbf
