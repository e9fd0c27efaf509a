#include "nbf/correlation.hpp"

#include <cmath>
#include <utility>

namespace nbf {

PairedSample::PairedSample(Eigen::VectorXd x, Eigen::VectorXd y)
    : x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() != y_.size())
    throw ValidationError("pairs", "x and y have different lengths");
  if (x_.size() < 3)
    throw ValidationError("pairs", "need at least 3 pairs");
  if (!x_.allFinite() || !y_.allFinite())
    throw ValidationError("pairs", "observations must be finite");
}

CorrelationValue::CorrelationValue(double r) : r_(r) {
  if (!std::isfinite(r_) || r_ <= -1.0 || r_ >= 1.0)
    throw DomainError("r must lie strictly inside (-1, 1)");
  if (std::fabs(r_) >= 1.0 - kDegenerateRTolerance)
    throw DegenerateCorrelationError(
        "|r| within 1e-12 of 1: Fisher transform diverges");
}

CorrelationValue pearson_r(const PairedSample& sample) {
  const Eigen::ArrayXd cx = sample.x().array() - sample.x().mean();
  const Eigen::ArrayXd cy = sample.y().array() - sample.y().mean();
  // Mean form rather than raw sums: duplicating every pair m times then
  // divides both numerator and denominator by the same count, so the
  // estimate is invariant under sample replication.
  const double n = static_cast<double>(sample.size());
  const double cov = (cx * cy).sum() / n;
  const double var_x = (cx * cx).sum() / n;
  const double var_y = (cy * cy).sum() / n;
  if (var_x == 0.0)
    throw UndefinedCorrelationError("x has zero variance");
  if (var_y == 0.0)
    throw UndefinedCorrelationError("y has zero variance");
  const double r = cov / (std::sqrt(var_x) * std::sqrt(var_y));
  if (std::fabs(r) >= 1.0 - kDegenerateRTolerance)
    throw DegenerateCorrelationError(
        "sample is (near-)collinear: |r| within 1e-12 of 1");
  return CorrelationValue(r);
}

double fisher_z(const CorrelationValue& r) {
  return std::copysign(std::atanh(std::fabs(r.r())), r.r());
}

NbValue nb_dti(const CorrelationValue& r) {
  const double abs_z = std::atanh(std::fabs(r.r()));
  return NbValue(detail::canonical01(abs_z), Domain::correlation, "dti");
}

}  // namespace nbf
