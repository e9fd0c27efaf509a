#include "nbf/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "nbf/report.hpp"

namespace nbf {

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

std::vector<std::string> split_csv_arg(const std::string& arg) {
  std::vector<std::string> parts;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

double parse_double_arg(const std::string& s, const std::string& flag) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(flag + ": '" + s + "' is not a number");
  return v;
}

std::int64_t parse_int_arg(const std::string& s, const std::string& flag) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(flag + ": '" + s + "' is not an integer");
  return v;
}

void emit(const RobustnessReport& report, const std::string& format,
          std::ostream& out) {
  if (format == "json")
    out << to_json(report).dump() << "\n";
  else
    out << render_text(report);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Neutrality boundary robustness metrics"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  // table
  auto* table_cmd =
      app.add_subcommand("table", "nb for a contingency table (CSV counts)");
  table_cmd->fallthrough();
  std::string table_input;
  bool force_rxc = false;
  table_cmd->add_option("--input", table_input, "CSV file of counts, - for stdin")
      ->required();
  table_cmd->add_flag("--force-rxc", force_rxc,
                      "Apply the generalized r x c formula to 2x2 tables");

  // anova
  auto* anova_cmd = app.add_subcommand("anova", "nb for a one-way ANOVA");
  anova_cmd->fallthrough();
  std::string anova_input;
  std::string anova_summary;
  anova_cmd->add_option("--input", anova_input,
                        "CSV file with header group,value, - for stdin");
  anova_cmd->add_option("--summary", anova_summary,
                        "Summary statistics dfb,dfw,F (bypasses raw data)");

  // correlation
  auto* corr_cmd =
      app.add_subcommand("correlation", "nb for a Pearson correlation");
  corr_cmd->fallthrough();
  std::string corr_input;
  std::optional<double> corr_r;
  corr_cmd->add_option("--input", corr_input,
                       "CSV file with header x,y, - for stdin");
  corr_cmd->add_option("--r", corr_r, "Correlation coefficient in (-1, 1)");

  // classify
  auto* classify_cmd =
      app.add_subcommand("classify", "Interpretation band for an nb value");
  classify_cmd->fallthrough();
  double classify_value = 0.0;
  classify_cmd->add_option("--value", classify_value, "nb value in [0, 1)")
      ->required();

  // simulate
  auto* sim_cmd = app.add_subcommand(
      "simulate", "Sample-size invariance simulation for a 2x2 population");
  sim_cmd->fallthrough();
  std::string sim_pop;
  std::string sim_sizes;
  std::int64_t sim_reps = 1000;
  std::uint64_t sim_seed = 0;
  unsigned sim_threads = 1;
  sim_cmd->add_option("--pop", sim_pop, "Cell probabilities p11,p12,p21,p22")
      ->required();
  sim_cmd->add_option("--sizes", sim_sizes, "Sample sizes n1,n2,...")
      ->required();
  sim_cmd->add_option("--reps", sim_reps, "Replicates per sample size")
      ->capture_default_str();
  sim_cmd->add_option("--seed", sim_seed, "Simulation seed")
      ->capture_default_str();
  sim_cmd->add_option("--threads", sim_threads, "Worker threads")
      ->capture_default_str();

  std::vector<std::string> argv(args);
  try {
    app.parse(std::vector<std::string>(argv.rbegin(), argv.rend()));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*table_cmd) {
      const ContingencyTable table =
          parse_table_csv(std::string_view(read_input(table_input)));
      emit(report_for_table(table, force_rxc), format, out);
      return 0;
    }

    if (*anova_cmd) {
      if (anova_summary.empty() == anova_input.empty())
        throw ParseError("anova needs exactly one of --input or --summary");
      if (!anova_summary.empty()) {
        const auto parts = split_csv_arg(anova_summary);
        if (parts.size() != 3)
          throw ParseError("--summary expects dfb,dfw,F");
        const AnovaSummary summary(parse_int_arg(parts[0], "--summary dfb"),
                                   parse_int_arg(parts[1], "--summary dfw"),
                                   parse_double_arg(parts[2], "--summary F"));
        emit(report_for_anova(summary), format, out);
      } else {
        const LabeledGroups groups =
            parse_groups_csv(std::string_view(read_input(anova_input)));
        emit(report_for_anova(groups), format, out);
      }
      return 0;
    }

    if (*corr_cmd) {
      const bool have_r = corr_r.has_value();
      const bool have_input = !corr_input.empty();
      if (have_r == have_input)
        throw ParseError("correlation needs exactly one of --input or --r");
      if (corr_r) {
        emit(report_for_correlation(CorrelationValue(*corr_r)), format, out);
      } else {
        const PairedSample sample =
            parse_pairs_csv(std::string_view(read_input(corr_input)));
        emit(report_for_correlation(sample), format, out);
      }
      return 0;
    }

    if (*classify_cmd) {
      emit(report_for_classify(classify_value), format, out);
      return 0;
    }

    if (*sim_cmd) {
      const auto pop_parts = split_csv_arg(sim_pop);
      if (pop_parts.size() != 4)
        throw ParseError("--pop expects p11,p12,p21,p22");
      const PopulationTable2x2 pop(parse_double_arg(pop_parts[0], "--pop p11"),
                                   parse_double_arg(pop_parts[1], "--pop p12"),
                                   parse_double_arg(pop_parts[2], "--pop p21"),
                                   parse_double_arg(pop_parts[3], "--pop p22"));
      std::vector<std::int64_t> sizes;
      for (const auto& s : split_csv_arg(sim_sizes))
        sizes.push_back(parse_int_arg(s, "--sizes"));
      const SimulationResult result =
          run_estimator_sim(pop, sizes, sim_reps, sim_seed, sim_threads);
      if (format == "json") {
        nlohmann::json j = to_json(result);
        j["inputs"] = nlohmann::json{{"pop", pop.probs()},
                                     {"sizes", sizes},
                                     {"reps", sim_reps},
                                     {"seed", sim_seed}};
        out << j.dump() << "\n";
      } else {
        out << render_text(result);
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }

  err << "error: no subcommand given\n";
  return 2;
}

}  // namespace nbf
