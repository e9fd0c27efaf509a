#include "nbf/core.hpp"

#include <cmath>

#include "doctest.h"
#include "support/generators.hpp"
#include "support/ulp.hpp"

using nbf::canonical_transform;
using nbf::Contrast;
using nbf::nb_general;
using nbf::NbValue;
using testsupport::Gen;
using testsupport::ulp_distance;

TEST_CASE("nb_general worked values") {
  CHECK(nb_general(Contrast(5.0, 5.0, 2.0)).value() == 0.0);
  CHECK(nb_general(Contrast(3.0, 0.0, 3.0)).value() == 0.5);
  // 1000 / (1000 + 2500) = 2/7
  CHECK(nb_general(Contrast(1000.0, 0.0, 2500.0)).value() ==
        doctest::Approx(2.0 / 7.0).epsilon(1e-15));
}

TEST_CASE("nb_general validation names the offending field") {
  const double nan = std::nan("");
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_WITH_AS(nb_general(Contrast(nan, 0.0, 1.0)),
                       doctest::Contains("delta"), nbf::ValidationError);
  CHECK_THROWS_WITH_AS(nb_general(Contrast(0.0, inf, 1.0)),
                       doctest::Contains("delta0"), nbf::ValidationError);
  CHECK_THROWS_WITH_AS(nb_general(Contrast(0.0, 0.0, 0.0)),
                       doctest::Contains("scale"), nbf::ValidationError);
  CHECK_THROWS_AS(Contrast(0.0, 0.0, -1.0), nbf::ValidationError);
  CHECK_THROWS_AS(Contrast(0.0, 0.0, nan), nbf::ValidationError);
}

TEST_CASE("nb never reaches 1: absurd contrast ratios are rejected") {
  // |delta|/scale beyond ~2^53 rounds x/(1+x) to exactly 1.0, which the
  // NbValue constructor refuses rather than silently clamping.
  CHECK_THROWS_AS(nb_general(Contrast(1e18, 0.0, 1.0)), nbf::ValidationError);
}

TEST_CASE("canonical_transform worked values") {
  CHECK(canonical_transform(0.0).value() == 0.0);
  CHECK(canonical_transform(1.0).value() == 0.5);
  // (4/3) / (7/3) = 4/7
  CHECK(canonical_transform(4.0 / 3.0).value() ==
        doctest::Approx(4.0 / 7.0).epsilon(1e-15));
  CHECK_THROWS_AS(canonical_transform(-0.5), nbf::ValidationError);
  CHECK_THROWS_AS(canonical_transform(std::nan("")), nbf::ValidationError);
  CHECK_THROWS_AS(canonical_transform(
                      std::numeric_limits<double>::infinity()),
                  nbf::ValidationError);
}

TEST_CASE("NbValue construction enforces [0,1)") {
  CHECK(NbValue(0.0, nbf::Domain::general, "x").value() == 0.0);
  CHECK(NbValue(std::nextafter(1.0, 0.0), nbf::Domain::general, "x").value() <
        1.0);
  CHECK_THROWS_AS(NbValue(1.0, nbf::Domain::general, "x"),
                  nbf::ValidationError);
  CHECK_THROWS_AS(NbValue(1.5, nbf::Domain::general, "x"),
                  nbf::ValidationError);
  CHECK_THROWS_AS(NbValue(-0.1, nbf::Domain::general, "x"),
                  nbf::ValidationError);
  CHECK_THROWS_AS(NbValue(std::nan(""), nbf::Domain::general, "x"),
                  nbf::ValidationError);
}

TEST_CASE("boundedness: nb in [0,1) with zero exactly at neutrality") {
  Gen gen(20250601);
  for (int i = 0; i < 10000; ++i) {
    const double delta0 = gen.signed_log_uniform(-6.0, 6.0);
    const bool at_neutrality = (i % 4 == 0);
    const double delta =
        at_neutrality ? delta0 : gen.signed_log_uniform(-6.0, 6.0);
    const double scale = gen.positive_log_uniform(-6.0, 6.0);
    const double v = nb_general(Contrast(delta, delta0, scale)).value();
    REQUIRE(v >= 0.0);
    REQUIRE(v < 1.0);
    if (delta == delta0)
      REQUIRE(v == 0.0);
    else
      REQUIRE(v > 0.0);
  }
}

TEST_CASE("monotonicity in |delta - delta0| for fixed delta0 and scale") {
  Gen gen(20250602);
  for (int i = 0; i < 10000; ++i) {
    const double delta0 = gen.uniform(-100.0, 100.0);
    const double scale = gen.positive_log_uniform(-3.0, 3.0);
    const double d1 = gen.positive_log_uniform(-4.0, 4.0);
    const double d2 = d1 * gen.uniform(1.001, 1000.0);
    const double sign = gen.uniform_int(0, 1) ? 1.0 : -1.0;
    const double nb1 = nb_general(Contrast(delta0 + sign * d1, delta0, scale)).value();
    const double nb2 = nb_general(Contrast(delta0 - d2, delta0, scale)).value();
    // |delta1 - delta0| < |delta2 - delta0| regardless of the side.
    REQUIRE(std::fabs((delta0 + sign * d1) - delta0) <
            std::fabs((delta0 - d2) - delta0));
    REQUIRE(nb1 < nb2);
  }
}

TEST_CASE("strictly decreasing in the scale parameter") {
  Gen gen(20250603);
  for (int i = 0; i < 10000; ++i) {
    const double delta = gen.signed_log_uniform(-3.0, 3.0);
    const double s1 = gen.positive_log_uniform(-3.0, 3.0);
    const double s2 = s1 * gen.uniform(1.001, 100.0);
    const double nb1 = nb_general(Contrast(delta, 0.0, s1)).value();
    const double nb2 = nb_general(Contrast(delta, 0.0, s2)).value();
    REQUIRE(nb1 > nb2);
  }
}

TEST_CASE("agrees with canonical_transform on zero-reference contrasts") {
  Gen gen(20250604);
  std::int64_t worst = 0;
  for (int i = 0; i < 10000; ++i) {
    const double delta = gen.signed_log_uniform(-6.0, 6.0);
    const double scale = gen.positive_log_uniform(-6.0, 6.0);
    const double a = nb_general(Contrast(delta, 0.0, scale)).value();
    const double b = canonical_transform(std::fabs(delta) / scale).value();
    worst = std::max(worst, ulp_distance(a, b));
  }
  CHECK(worst <= 2);
}

TEST_CASE("common positive factor on delta, delta0, scale leaves nb put") {
  Gen gen(20250605);
  std::int64_t worst = 0;
  for (int i = 0; i < 10000; ++i) {
    // Well-separated pair so the scaled subtraction stays benign: the
    // 4-ulp bound concerns the formula, not cancellation in the inputs.
    const double delta0 = gen.uniform(-1.0, 1.0);
    const double offset = gen.signed_log_uniform(0.0, 3.0);
    const double delta = delta0 + offset;
    const double scale = gen.positive_log_uniform(-2.0, 4.0);
    const double k = (i % 2 == 0)
                         ? std::ldexp(1.0, static_cast<int>(gen.uniform_int(-40, 40)))
                         : gen.positive_log_uniform(-8.0, 8.0);
    const double base = nb_general(Contrast(delta, delta0, scale)).value();
    const double scaled =
        nb_general(Contrast(k * delta, k * delta0, k * scale)).value();
    worst = std::max(worst, ulp_distance(base, scaled));
  }
  CHECK(worst <= 4);
}
