#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nbf/anova.hpp"
#include "nbf/classify.hpp"
#include "nbf/contingency.hpp"
#include "nbf/correlation.hpp"
#include "nbf/csv.hpp"
#include "nbf/simulate.hpp"

namespace nbf {

// One computed metric packaged for output: value, interpretation band,
// named intermediates, and an echo of the parsed inputs sufficient to
// recompute the value.
struct RobustnessReport {
  std::string metric;  // nb_2x2 | nb_rxc | partial_eta_sq | cohens_f_nb | dti | nb
  double value = 0.0;
  RobustnessBand band{};
  std::vector<std::pair<std::string, double>> auxiliary;
  std::vector<std::string> warnings;
  nlohmann::json inputs_echo;
};

RobustnessReport report_for_table(const ContingencyTable& table,
                                  bool force_rxc = false);
RobustnessReport report_for_anova(const AnovaSummary& summary);
RobustnessReport report_for_anova(const LabeledGroups& data);
RobustnessReport report_for_correlation(const CorrelationValue& r);
RobustnessReport report_for_correlation(const PairedSample& sample);
RobustnessReport report_for_classify(double value);

// Value printed with 6 significant digits (shortest %g form).
std::string format_sig6(double v);

// Line-oriented rendering: metric, value, band, meaning, then the named
// intermediates, then one "warning:" line each.
std::string render_text(const RobustnessReport& report);
std::string render_text(const SimulationResult& result);

// JSON object with stable field names; numbers carry full binary64
// precision (shortest round-trip decimals).
nlohmann::json to_json(const RobustnessReport& report);
nlohmann::json to_json(const SimulationResult& result);

// Recomputes the metric value from the "inputs" echo of a JSON report.
// The round-trip contract: the result matches the report's "value" to
// within 2 ulps.
double recompute_value(const nlohmann::json& report_json);

}  // namespace nbf
