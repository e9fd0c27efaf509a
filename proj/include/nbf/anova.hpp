#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "nbf/core.hpp"
#include "nbf/errors.hpp"

namespace nbf {

// Raw observations for a one-way fixed-effect design, one vector per group.
using GroupData = std::vector<Eigen::VectorXd>;

// Sufficient summary of a one-way ANOVA: degrees of freedom and F.
class AnovaSummary {
 public:
  AnovaSummary(std::int64_t df_between, std::int64_t df_within, double f_stat)
      : df_between_(df_between), df_within_(df_within), f_stat_(f_stat) {
    if (df_between_ < 1)
      throw ValidationError("df_between", "must be a positive integer");
    if (df_within_ < 1)
      throw ValidationError("df_within", "must be a positive integer");
    if (!std::isfinite(f_stat_) || f_stat_ < 0.0)
      throw ValidationError("f_stat", "must be finite and >= 0");
  }

  std::int64_t df_between() const noexcept { return df_between_; }
  std::int64_t df_within() const noexcept { return df_within_; }
  double f_stat() const noexcept { return f_stat_; }

 private:
  std::int64_t df_between_;
  std::int64_t df_within_;
  double f_stat_;
};

// Checks the GroupData shape: at least two groups, each with at least two
// finite observations. Throws ValidationError otherwise.
void validate_group_data(const GroupData& data);

// One-way sum-of-squares decomposition:
//   df_b = k - 1, df_w = N - k,
//   F = (SS_between / df_b) / (SS_within / df_w).
// All sums of squares use two-pass, mean-subtracted summation.
// Throws InfiniteFError when SS_within = 0 with SS_between > 0, and
// IndeterminateAnovaError when both are 0.
AnovaSummary anova_from_raw(const GroupData& data);

// nb = partial eta squared = df_b*F / (df_b*F + df_w), in [0, 1).
// Equals SS_between / (SS_between + SS_within) for one-way designs.
NbValue nb_partial_eta_sq(const AnovaSummary& summary);

// Cohen's f = sqrt(eta^2 / (1 - eta^2)) for eta^2 in [0, 1).
double cohens_f(double eta_sq);

// The monotone-equivalent alternative nb = f / (1 + f) with f = Cohen's f
// of the partial eta squared.
NbValue nb_cohens_f(const AnovaSummary& summary);

}  // namespace nbf
