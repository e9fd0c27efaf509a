#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nbf/contingency.hpp"
#include "nbf/core.hpp"
#include "nbf/errors.hpp"

namespace nbf {

// Cell probabilities (p11, p12; p21, p22) of a 2x2 population, on the
// simplex to within 1e-12.
class PopulationTable2x2 {
 public:
  PopulationTable2x2(double p11, double p12, double p21, double p22);

  const std::array<double, 4>& probs() const noexcept { return p_; }
  double p11() const noexcept { return p_[0]; }
  double p12() const noexcept { return p_[1]; }
  double p21() const noexcept { return p_[2]; }
  double p22() const noexcept { return p_[3]; }

  // All probability mass on one cell: every sample is the same table.
  bool is_degenerate() const noexcept;

 private:
  std::array<double, 4> p_;
};

// Population nb: RQ = 4|p11*p22 - p12*p21|, nb = RQ/(1+RQ). A function of
// the probabilities alone; no sample size appears.
double population_nb_2x2(const PopulationTable2x2& pop);

// Whether rq_rxc(k * table) equals rq_rxc(table) exactly, compared as
// reduced integer ratios. Holds for every table and k >= 1 because
// numerator and denominator both scale by k^2.
bool scale_check(const ContingencyTable& table, std::int64_t k);

struct PerNEstimate {
  std::int64_t n = 0;
  double mean_nb_hat = 0.0;
  // Sample standard deviation over replicates; empty when replicates < 2.
  std::optional<double> sd_nb_hat;
  std::int64_t replicates = 0;
};

struct SimulationResult {
  double population_nb = 0.0;
  std::vector<PerNEstimate> per_n;
  std::uint64_t seed = 0;
  // Identifier of the random source, recorded so results can be audited:
  // per-replicate mt19937_64 keyed by a splitmix64 mix of
  // (seed, n, replicate index), uniforms from the top 53 bits.
  std::string rng_id;
  std::vector<std::string> warnings;
};

inline constexpr const char* kSimulationRngId =
    "mt19937_64/splitmix64(seed,n,rep)/u53";

// For each requested n, draws `replicates` multinomial(n, pop) tables,
// computes nb_2x2 on each, and records the mean and standard deviation of
// the estimates. Bit-identical output for identical inputs regardless of
// `threads`: every replicate derives its own generator from
// (seed, n, replicate index) alone and results are aggregated in index
// order.
SimulationResult run_estimator_sim(const PopulationTable2x2& pop,
                                   const std::vector<std::int64_t>& sample_sizes,
                                   std::int64_t replicates, std::uint64_t seed,
                                   unsigned threads = 1);

namespace detail {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Per-replicate engine key, a pure function of (seed, n, rep).
std::uint64_t replicate_key(std::uint64_t seed, std::uint64_t n,
                            std::uint64_t rep) noexcept;

// One multinomial(n, pop) draw as a fourfold table's cell counts.
std::array<std::int64_t, 4> sample_table(const PopulationTable2x2& pop,
                                         std::int64_t n,
                                         std::uint64_t engine_key);

}  // namespace detail

}  // namespace nbf
