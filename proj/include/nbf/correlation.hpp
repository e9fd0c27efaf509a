#pragma once

#include <Eigen/Dense>

#include "nbf/core.hpp"
#include "nbf/errors.hpp"

namespace nbf {

// |r| within this distance of 1 is treated as degenerate: the Fisher
// transform diverges and nb would collapse against its open bound.
inline constexpr double kDegenerateRTolerance = 1e-12;

// Paired observations (x_i, y_i), at least three of them.
class PairedSample {
 public:
  PairedSample(Eigen::VectorXd x, Eigen::VectorXd y);

  const Eigen::VectorXd& x() const noexcept { return x_; }
  const Eigen::VectorXd& y() const noexcept { return y_; }
  Eigen::Index size() const noexcept { return x_.size(); }

 private:
  Eigen::VectorXd x_;
  Eigen::VectorXd y_;
};

// A Pearson correlation validated to lie strictly inside (-1, 1) and away
// from the degenerate rim.
class CorrelationValue {
 public:
  explicit CorrelationValue(double r);

  double r() const noexcept { return r_; }

 private:
  double r_;
};

// Product-moment correlation via two-pass centered sums.
// Throws UndefinedCorrelationError when either coordinate has zero
// variance and DegenerateCorrelationError when |r| >= 1 - 1e-12.
CorrelationValue pearson_r(const PairedSample& sample);

// Fisher transform z = atanh(r) = log((1+r)/(1-r)) / 2. Odd in r; the
// implementation evaluates atanh(|r|) and restores the sign so that
// z(-r) == -z(r) bit for bit.
double fisher_z(const CorrelationValue& r);

// Distance to independence: nb = |z| / (1 + |z|). Zero exactly at r = 0
// and symmetric in the sign of r.
NbValue nb_dti(const CorrelationValue& r);

}  // namespace nbf
