#include "nbf/simulate.hpp"

#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "nbf/contingency.hpp"
#include "support/generators.hpp"

using nbf::ContingencyTable;
using nbf::population_nb_2x2;
using nbf::PopulationTable2x2;
using nbf::run_estimator_sim;
using nbf::scale_check;
using testsupport::Gen;

TEST_CASE("population table validation") {
  CHECK_THROWS_AS(PopulationTable2x2(0.5, 0.5, 0.5, 0.5),
                  nbf::ValidationError);
  CHECK_THROWS_WITH_AS(PopulationTable2x2(0.5, -0.1, 0.3, 0.3),
                       doctest::Contains("p12"), nbf::ValidationError);
  CHECK_THROWS_AS(PopulationTable2x2(0.25, 0.25, 0.25, 0.25 + 1e-9),
                  nbf::ValidationError);
  // Rounding-level slack is accepted.
  CHECK_NOTHROW(PopulationTable2x2(0.3, 0.2, 0.1, 0.4));
}

TEST_CASE("population_nb_2x2 worked values") {
  CHECK(population_nb_2x2(PopulationTable2x2(0.25, 0.25, 0.25, 0.25)) == 0.0);
  CHECK(population_nb_2x2(PopulationTable2x2(0.5, 0.0, 0.0, 0.5)) == 0.5);
  const double pop_nb = population_nb_2x2(PopulationTable2x2(0.3, 0.2, 0.1, 0.4));
  CHECK(pop_nb == doctest::Approx(2.0 / 7.0).epsilon(1e-15));
  // Matches the count-scale value of the same distribution times 100.
  CHECK(pop_nb == doctest::Approx(nbf::nb_2x2(ContingencyTable::fourfold(
                                                  30, 20, 10, 40))
                                      .value())
                      .epsilon(1e-14));
}

TEST_CASE("scale_check worked values and sweep") {
  CHECK(scale_check(ContingencyTable::fourfold(30, 20, 10, 40), 3));
  CHECK(scale_check(ContingencyTable::fourfold(30, 20, 10, 40), 1));
  nbf::CountMatrix diag(3, 3);
  diag << 3, 0, 0, 0, 3, 0, 0, 0, 3;
  CHECK(scale_check(ContingencyTable(std::move(diag)), 7));
  CHECK_THROWS_AS(scale_check(ContingencyTable::fourfold(1, 2, 3, 4), 0),
                  nbf::ValidationError);

  Gen gen(630001);
  for (int i = 0; i < 300; ++i) {
    const auto t = gen.table_rxc(gen.uniform_int(2, 4), gen.uniform_int(2, 4),
                                 25);
    CHECK(scale_check(t, gen.uniform_int(1, 12)));
  }
}

TEST_CASE("simulation input validation") {
  const PopulationTable2x2 pop(0.3, 0.2, 0.1, 0.4);
  CHECK_THROWS_AS(run_estimator_sim(pop, {}, 100, 1), nbf::ValidationError);
  CHECK_THROWS_AS(run_estimator_sim(pop, {3}, 100, 1), nbf::ValidationError);
  CHECK_THROWS_AS(run_estimator_sim(pop, {50}, 0, 1), nbf::ValidationError);
}

TEST_CASE("simulation is deterministic, also across thread counts") {
  const PopulationTable2x2 pop(0.3, 0.2, 0.1, 0.4);
  const std::vector<std::int64_t> sizes{16, 64};
  const auto a = run_estimator_sim(pop, sizes, 500, 42, 1);
  const auto b = run_estimator_sim(pop, sizes, 500, 42, 1);
  const auto c = run_estimator_sim(pop, sizes, 500, 42, 4);
  const auto d = run_estimator_sim(pop, sizes, 500, 42, 7);
  REQUIRE(a.per_n.size() == 2);
  for (std::size_t i = 0; i < a.per_n.size(); ++i) {
    CHECK(a.per_n[i].mean_nb_hat == b.per_n[i].mean_nb_hat);
    CHECK(a.per_n[i].mean_nb_hat == c.per_n[i].mean_nb_hat);
    CHECK(a.per_n[i].mean_nb_hat == d.per_n[i].mean_nb_hat);
    CHECK(*a.per_n[i].sd_nb_hat == *c.per_n[i].sd_nb_hat);
    CHECK(*a.per_n[i].sd_nb_hat == *d.per_n[i].sd_nb_hat);
  }
  CHECK(a.rng_id == nbf::kSimulationRngId);
  CHECK(a.seed == 42);

  const auto other_seed = run_estimator_sim(pop, sizes, 500, 43, 1);
  CHECK(other_seed.per_n[0].mean_nb_hat != a.per_n[0].mean_nb_hat);
}

TEST_CASE("single replicate flags the undefined standard deviation") {
  const PopulationTable2x2 pop(0.3, 0.2, 0.1, 0.4);
  const auto r = run_estimator_sim(pop, {32}, 1, 7);
  REQUIRE(r.per_n.size() == 1);
  CHECK(r.per_n[0].replicates == 1);
  CHECK_FALSE(r.per_n[0].sd_nb_hat.has_value());
  CHECK(r.per_n[0].mean_nb_hat >= 0.0);
  CHECK(r.per_n[0].mean_nb_hat < 1.0);
}

TEST_CASE("degenerate population warns and proceeds") {
  const PopulationTable2x2 pop(1.0, 0.0, 0.0, 0.0);
  CHECK(pop.is_degenerate());
  const auto r = run_estimator_sim(pop, {16}, 50, 9);
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("degenerate") != std::string::npos);
  // Every draw is (n,0;0,0): cross product 0, nb 0.
  CHECK(r.per_n[0].mean_nb_hat == 0.0);
  CHECK(r.population_nb == 0.0);
}

TEST_CASE("estimator bias at neutrality shrinks with n") {
  const PopulationTable2x2 uniform(0.25, 0.25, 0.25, 0.25);
  CHECK(population_nb_2x2(uniform) == 0.0);
  const auto r = run_estimator_sim(uniform, {8, 64, 512}, 4000, 11);
  // nb_hat >= 0 always, so the mean sits above the population value 0 and
  // falls toward it as n grows.
  CHECK(r.per_n[0].mean_nb_hat > 0.0);
  CHECK(r.per_n[0].mean_nb_hat > r.per_n[1].mean_nb_hat);
  CHECK(r.per_n[1].mean_nb_hat > r.per_n[2].mean_nb_hat);
}

TEST_CASE("sampler matches the exact enumeration mean at n = 8") {
  // Oracle: exact E[nb_hat] at n = 8 over all 165 cell compositions,
  // computed from multinomial probabilities.
  const PopulationTable2x2 pop(0.3, 0.2, 0.1, 0.4);
  double exact_mean = 0.0;
  double total_p = 0.0;
  const int n = 8;
  double log_fact[9];
  log_fact[0] = 0.0;
  for (int i = 1; i <= n; ++i) log_fact[i] = log_fact[i - 1] + std::log(i);
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b + a <= n; ++b)
      for (int c = 0; c + b + a <= n; ++c) {
        const int d = n - a - b - c;
        const double logp =
            log_fact[n] - log_fact[a] - log_fact[b] - log_fact[c] -
            log_fact[d] + a * std::log(pop.p11()) + b * std::log(pop.p12()) +
            c * std::log(pop.p21()) + d * std::log(pop.p22());
        const double p = std::exp(logp);
        total_p += p;
        const double rq = 4.0 * std::abs(a * d - b * c) / double(n * n);
        exact_mean += p * rq / (1.0 + rq);
      }
  CHECK(total_p == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(exact_mean == doctest::Approx(0.2577137196071202).epsilon(1e-12));

  const std::int64_t reps = 20000;
  const auto r = run_estimator_sim(pop, {8}, reps, 20250608);
  const double se = *r.per_n[0].sd_nb_hat / std::sqrt(double(reps));
  CHECK(std::fabs(r.per_n[0].mean_nb_hat - exact_mean) <= 4.0 * se);
}

TEST_CASE("estimator mean converges along a doubling ladder") {
  const PopulationTable2x2 pop(0.3, 0.2, 0.1, 0.4);
  const double target = population_nb_2x2(pop);
  const std::int64_t reps = 4000;
  const auto r = run_estimator_sim(pop, {50, 200, 800, 3200}, reps, 77);
  double prev_err = std::numeric_limits<double>::infinity();
  for (const auto& e : r.per_n) {
    const double err = std::fabs(e.mean_nb_hat - target);
    const double noise =
        3.0 * *e.sd_nb_hat / std::sqrt(double(reps)) + 0.005;
    CHECK(err <= prev_err + noise);
    prev_err = err;
  }
  // And the far end of the ladder is close in absolute terms.
  CHECK(std::fabs(r.per_n.back().mean_nb_hat - target) <= 0.01);
}
