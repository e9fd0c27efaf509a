#include "nbf/anova.hpp"

#include <cmath>
#include <string>

namespace nbf {

void validate_group_data(const GroupData& data) {
  if (data.size() < 2)
    throw ValidationError("groups", "need at least two groups");
  for (std::size_t g = 0; g < data.size(); ++g) {
    if (data[g].size() < 2)
      throw ValidationError("groups", "group " + std::to_string(g) +
                                          " has fewer than 2 observations");
    if (!data[g].allFinite())
      throw ValidationError("groups", "group " + std::to_string(g) +
                                          " contains a non-finite value");
  }
}

AnovaSummary anova_from_raw(const GroupData& data) {
  validate_group_data(data);

  const std::int64_t k = static_cast<std::int64_t>(data.size());
  std::int64_t total_n = 0;
  double total_sum = 0.0;
  for (const auto& group : data) {
    total_n += group.size();
    total_sum += group.sum();
  }
  const double grand_mean = total_sum / static_cast<double>(total_n);

  double ss_between = 0.0;
  double ss_within = 0.0;
  for (const auto& group : data) {
    const double mean = group.mean();
    ss_within += (group.array() - mean).square().sum();
    const double sep = mean - grand_mean;
    ss_between += static_cast<double>(group.size()) * sep * sep;
  }

  const std::int64_t df_b = k - 1;
  const std::int64_t df_w = total_n - k;
  if (ss_within == 0.0) {
    if (ss_between == 0.0)
      throw IndeterminateAnovaError(
          "all observations identical: F is indeterminate (0/0)");
    throw InfiniteFError(
        "zero within-group variance with separated means: F is infinite");
  }

  const double f = (ss_between / static_cast<double>(df_b)) /
                   (ss_within / static_cast<double>(df_w));
  return AnovaSummary(df_b, df_w, f);
}

NbValue nb_partial_eta_sq(const AnovaSummary& summary) {
  const double num =
      static_cast<double>(summary.df_between()) * summary.f_stat();
  const double value = num / (num + static_cast<double>(summary.df_within()));
  return NbValue(value, Domain::anova, "partial_eta_sq");
}

double cohens_f(double eta_sq) {
  if (!std::isfinite(eta_sq) || eta_sq < 0.0 || eta_sq >= 1.0)
    throw ValidationError("eta_sq", "must lie in [0, 1)");
  return std::sqrt(eta_sq / (1.0 - eta_sq));
}

NbValue nb_cohens_f(const AnovaSummary& summary) {
  const double f = cohens_f(nb_partial_eta_sq(summary).value());
  return NbValue(detail::canonical01(f), Domain::anova, "cohens_f_nb");
}

}  // namespace nbf
