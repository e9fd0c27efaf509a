#include "nbf/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace nbf {

PopulationTable2x2::PopulationTable2x2(double p11, double p12, double p21,
                                       double p22)
    : p_{p11, p12, p21, p22} {
  static constexpr const char* names[4] = {"p11", "p12", "p21", "p22"};
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (!std::isfinite(p_[i]) || p_[i] < 0.0)
      throw ValidationError(names[i], "must be finite and >= 0");
    sum += p_[i];
  }
  if (std::fabs(sum - 1.0) > 1e-12)
    throw ValidationError("probabilities",
                          "must sum to 1 within 1e-12, got sum " +
                              std::to_string(sum));
}

bool PopulationTable2x2::is_degenerate() const noexcept {
  for (double p : p_)
    if (p == 1.0) return true;
  return false;
}

double population_nb_2x2(const PopulationTable2x2& pop) {
  const double rq = 4.0 * std::fabs(pop.p11() * pop.p22() -
                                    pop.p12() * pop.p21());
  return detail::canonical01(rq);
}

bool scale_check(const ContingencyTable& table, std::int64_t k) {
  if (k < 1) throw ValidationError("k", "must be >= 1");
  const auto base = detail::rq_rxc_exact(table);
  const auto scaled = detail::rq_rxc_exact(table.scaled(k));
  return base == scaled;
}

namespace detail {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t replicate_key(std::uint64_t seed, std::uint64_t n,
                            std::uint64_t rep) noexcept {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ n);
  h = splitmix64(h ^ rep);
  return h;
}

std::array<std::int64_t, 4> sample_table(const PopulationTable2x2& pop,
                                         std::int64_t n,
                                         std::uint64_t engine_key) {
  std::mt19937_64 engine(engine_key);
  const double t1 = pop.p11();
  const double t2 = t1 + pop.p12();
  const double t3 = t2 + pop.p21();
  std::array<std::int64_t, 4> counts{0, 0, 0, 0};
  for (std::int64_t i = 0; i < n; ++i) {
    // 53-bit uniform in [0, 1); the standardized engine output makes this
    // bit-reproducible everywhere, unlike uniform_real_distribution.
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    if (u < t1)
      ++counts[0];
    else if (u < t2)
      ++counts[1];
    else if (u < t3)
      ++counts[2];
    else
      ++counts[3];
  }
  return counts;
}

namespace {

// nb_2x2 of one sampled table.
double replicate_nb(const PopulationTable2x2& pop, std::int64_t n,
                    std::uint64_t seed, std::int64_t rep) {
  const auto c = sample_table(
      pop, n, replicate_key(seed, static_cast<std::uint64_t>(n),
                            static_cast<std::uint64_t>(rep)));
  return nb_2x2(ContingencyTable::fourfold(c[0], c[1], c[2], c[3])).value();
}

}  // namespace
}  // namespace detail

SimulationResult run_estimator_sim(const PopulationTable2x2& pop,
                                   const std::vector<std::int64_t>& sample_sizes,
                                   std::int64_t replicates, std::uint64_t seed,
                                   unsigned threads) {
  if (sample_sizes.empty())
    throw ValidationError("sample_sizes", "must not be empty");
  for (std::int64_t n : sample_sizes)
    if (n < 4) throw ValidationError("sample_sizes", "every n must be >= 4");
  if (replicates < 1)
    throw ValidationError("replicates", "must be >= 1");
  if (threads == 0) threads = 1;

  SimulationResult result;
  result.population_nb = population_nb_2x2(pop);
  result.seed = seed;
  result.rng_id = kSimulationRngId;
  if (pop.is_degenerate())
    result.warnings.push_back(
        "degenerate population: all probability mass on one cell");

  std::vector<double> values(static_cast<std::size_t>(replicates));
  for (std::int64_t n : sample_sizes) {
    const auto worker = [&](std::int64_t lo, std::int64_t hi) {
      for (std::int64_t rep = lo; rep < hi; ++rep)
        values[static_cast<std::size_t>(rep)] =
            detail::replicate_nb(pop, n, seed, rep);
    };
    const std::int64_t nthreads = static_cast<std::int64_t>(threads);
    if (nthreads == 1 || replicates < 2 * nthreads) {
      worker(0, replicates);
    } else {
      std::vector<std::thread> pool;
      const std::int64_t chunk = (replicates + nthreads - 1) / nthreads;
      for (std::int64_t lo = 0; lo < replicates; lo += chunk)
        pool.emplace_back(worker, lo, std::min(lo + chunk, replicates));
      for (auto& t : pool) t.join();
    }

    PerNEstimate est;
    est.n = n;
    est.replicates = replicates;
    double sum = 0.0;
    for (double v : values) sum += v;
    est.mean_nb_hat = sum / static_cast<double>(replicates);
    if (replicates >= 2) {
      double ss = 0.0;
      for (double v : values) {
        const double d = v - est.mean_nb_hat;
        ss += d * d;
      }
      est.sd_nb_hat = std::sqrt(ss / static_cast<double>(replicates - 1));
    }
    result.per_n.push_back(est);
  }
  return result;
}

}  // namespace nbf
