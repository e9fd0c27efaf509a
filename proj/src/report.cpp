#include "nbf/report.hpp"

#include <cstdio>
#include <sstream>

namespace nbf {

namespace {

RobustnessReport make_report(std::string metric, const NbValue& nb,
                             nlohmann::json inputs) {
  RobustnessReport r;
  r.metric = std::move(metric);
  r.value = nb.value();
  r.band = classify(nb);
  r.inputs_echo = std::move(inputs);
  return r;
}

nlohmann::json table_to_json(const ContingencyTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < table.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < table.cols(); ++j) row.push_back(table.cell(i, j));
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"table", std::move(rows)}};
}

}  // namespace

RobustnessReport report_for_table(const ContingencyTable& table,
                                  bool force_rxc) {
  const bool use_2x2 = table.is_2x2() && !force_rxc;
  const NbValue nb = use_2x2 ? nb_2x2(table) : nb_rxc(table);
  RobustnessReport r = make_report(use_2x2 ? "nb_2x2" : "nb_rxc", nb,
                                   table_to_json(table));
  r.auxiliary.emplace_back("rq", use_2x2 ? rq_2x2(table) : rq_rxc(table));
  if (table.has_zero_margin())
    r.warnings.push_back(
        "table has an all-zero row or column; expected counts contain zeros");
  return r;
}

RobustnessReport report_for_anova(const AnovaSummary& summary) {
  const NbValue nb = nb_partial_eta_sq(summary);
  RobustnessReport r = make_report(
      "partial_eta_sq", nb,
      nlohmann::json{{"df_between", summary.df_between()},
                     {"df_within", summary.df_within()},
                     {"f_stat", summary.f_stat()}});
  r.auxiliary.emplace_back("f_stat", summary.f_stat());
  r.auxiliary.emplace_back("eta_sq", nb.value());
  r.auxiliary.emplace_back("cohens_f", cohens_f(nb.value()));
  r.auxiliary.emplace_back("cohens_f_nb", nb_cohens_f(summary).value());
  return r;
}

RobustnessReport report_for_anova(const LabeledGroups& data) {
  const AnovaSummary summary = anova_from_raw(data.groups);
  RobustnessReport r = report_for_anova(summary);
  nlohmann::json groups = nlohmann::json::array();
  for (std::size_t g = 0; g < data.groups.size(); ++g) {
    nlohmann::json values = nlohmann::json::array();
    for (Eigen::Index i = 0; i < data.groups[g].size(); ++i)
      values.push_back(data.groups[g](i));
    groups.push_back(nlohmann::json{{"label", data.labels[g]},
                                    {"values", std::move(values)}});
  }
  r.inputs_echo = nlohmann::json{{"groups", std::move(groups)}};
  return r;
}

RobustnessReport report_for_correlation(const CorrelationValue& r_value) {
  const NbValue nb = nb_dti(r_value);
  RobustnessReport r =
      make_report("dti", nb, nlohmann::json{{"r", r_value.r()}});
  r.auxiliary.emplace_back("r", r_value.r());
  r.auxiliary.emplace_back("z", fisher_z(r_value));
  return r;
}

RobustnessReport report_for_correlation(const PairedSample& sample) {
  const CorrelationValue r_value = pearson_r(sample);
  RobustnessReport r = report_for_correlation(r_value);
  nlohmann::json pairs = nlohmann::json::array();
  for (Eigen::Index i = 0; i < sample.size(); ++i)
    pairs.push_back(nlohmann::json::array({sample.x()(i), sample.y()(i)}));
  r.inputs_echo = nlohmann::json{{"pairs", std::move(pairs)}};
  return r;
}

RobustnessReport report_for_classify(double value) {
  const NbValue nb(value, Domain::general, "nb");
  return make_report("nb", nb, nlohmann::json{{"value", value}});
}

std::string format_sig6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string render_text(const RobustnessReport& report) {
  std::ostringstream out;
  out << "metric: " << report.metric << "\n";
  out << "value: " << format_sig6(report.value) << "\n";
  out << "band: " << report.band.name << "\n";
  out << "meaning: " << report.band.interpretation << "\n";
  for (const auto& [name, value] : report.auxiliary)
    out << name << ": " << format_sig6(value) << "\n";
  for (const auto& w : report.warnings) out << "warning: " << w << "\n";
  return out.str();
}

std::string render_text(const SimulationResult& result) {
  std::ostringstream out;
  out << "population_nb: " << format_sig6(result.population_nb) << "\n";
  out << "seed: " << result.seed << "\n";
  out << "rng: " << result.rng_id << "\n";
  for (const auto& e : result.per_n) {
    out << "n: " << e.n << "  mean_nb_hat: " << format_sig6(e.mean_nb_hat)
        << "  sd_nb_hat: "
        << (e.sd_nb_hat ? format_sig6(*e.sd_nb_hat) : "undefined")
        << "  replicates: " << e.replicates << "\n";
  }
  for (const auto& w : result.warnings) out << "warning: " << w << "\n";
  return out.str();
}

nlohmann::json to_json(const RobustnessReport& report) {
  nlohmann::json j;
  j["metric"] = report.metric;
  j["value"] = report.value;
  for (const auto& [name, value] : report.auxiliary) j[name] = value;
  j["band"] = report.band.name;
  j["meaning"] = report.band.interpretation;
  j["warnings"] = report.warnings;
  j["inputs"] = report.inputs_echo;
  return j;
}

nlohmann::json to_json(const SimulationResult& result) {
  nlohmann::json per_n = nlohmann::json::array();
  for (const auto& e : result.per_n) {
    nlohmann::json entry;
    entry["n"] = e.n;
    entry["mean_nb_hat"] = e.mean_nb_hat;
    if (e.sd_nb_hat)
      entry["sd_nb_hat"] = *e.sd_nb_hat;
    else
      entry["sd_nb_hat"] = nullptr;
    entry["replicates"] = e.replicates;
    per_n.push_back(std::move(entry));
  }
  nlohmann::json j;
  j["population_nb"] = result.population_nb;
  j["seed"] = result.seed;
  j["rng"] = result.rng_id;
  j["per_n"] = std::move(per_n);
  j["warnings"] = result.warnings;
  return j;
}

double recompute_value(const nlohmann::json& report_json) {
  const std::string metric = report_json.at("metric").get<std::string>();
  const nlohmann::json& inputs = report_json.at("inputs");

  if (metric == "nb_2x2" || metric == "nb_rxc") {
    const auto& rows = inputs.at("table");
    CountMatrix cells(rows.size(), rows.at(0).size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        cells(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            rows[i][j].get<std::int64_t>();
    const ContingencyTable table(std::move(cells));
    return metric == "nb_2x2" ? nb_2x2(table).value() : nb_rxc(table).value();
  }

  if (metric == "partial_eta_sq" || metric == "cohens_f_nb") {
    AnovaSummary summary = [&] {
      if (inputs.contains("groups")) {
        GroupData groups;
        for (const auto& g : inputs.at("groups")) {
          const auto& values = g.at("values");
          Eigen::VectorXd v(values.size());
          for (std::size_t i = 0; i < values.size(); ++i)
            v(static_cast<Eigen::Index>(i)) = values[i].get<double>();
          groups.push_back(std::move(v));
        }
        return anova_from_raw(groups);
      }
      return AnovaSummary(inputs.at("df_between").get<std::int64_t>(),
                          inputs.at("df_within").get<std::int64_t>(),
                          inputs.at("f_stat").get<double>());
    }();
    return metric == "partial_eta_sq" ? nb_partial_eta_sq(summary).value()
                                      : nb_cohens_f(summary).value();
  }

  if (metric == "dti") {
    if (inputs.contains("pairs")) {
      const auto& pairs = inputs.at("pairs");
      Eigen::VectorXd x(pairs.size()), y(pairs.size());
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        x(static_cast<Eigen::Index>(i)) = pairs[i].at(0).get<double>();
        y(static_cast<Eigen::Index>(i)) = pairs[i].at(1).get<double>();
      }
      return nb_dti(pearson_r(PairedSample(std::move(x), std::move(y))))
          .value();
    }
    return nb_dti(CorrelationValue(inputs.at("r").get<double>())).value();
  }

  if (metric == "nb") return inputs.at("value").get<double>();

  throw ValidationError("metric", "unknown metric '" + metric + "'");
}

}  // namespace nbf
