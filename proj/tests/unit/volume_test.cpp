#include <gtest/gtest.h>

#include <cmath>
#include <cstring>

#include "octa/error.hpp"
#include "octa/volume.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace octa {
namespace {

ConeDeficits equilateral() { return ConeDeficits::make(kTwoPi / 3, kTwoPi / 3, kTwoPi / 3); }
ConeDeficits right_angled() { return ConeDeficits::make(kPi, kPi / 2, kPi / 2); }

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

TEST(Lobachevsky, SpecialValues) {
  EXPECT_EQ(lobachevsky(0.0), 0.0);
  EXPECT_NEAR(lobachevsky(kPi / 2), 0.0, 1e-15);
  EXPECT_NEAR(lobachevsky(kPi), 0.0, 1e-15);
  const double q = oracle::lobachevsky_quadrature(kPi / 3);
  EXPECT_NEAR(q, 1.0149416064 / 3, 1e-10);
  EXPECT_NEAR(lobachevsky(kPi / 3), q, 1e-13);
}

TEST(Lobachevsky, MatchesQuadrature) {
  testing::Gen gen(41);
  for (int n = 0; n < 300; ++n) {
    const double x = gen.uniform(1e-6, 3 * kPi / 4);
    ASSERT_NEAR(lobachevsky(x), oracle::lobachevsky_quadrature(x), 1e-12) << x;
  }
}

TEST(Lobachevsky, OddPeriodicAndDuplication) {
  testing::Gen gen(42);
  for (int n = 0; n < 1000; ++n) {
    const double x = gen.uniform(-10.0, 10.0);
    EXPECT_NEAR(lobachevsky(-x), -lobachevsky(x), 1e-12);
    EXPECT_NEAR(lobachevsky(x + kPi), lobachevsky(x), 1e-12);
    EXPECT_NEAR(lobachevsky(2 * x) / 2, lobachevsky(x) + lobachevsky(x + kPi / 2), 1e-10);
  }
}

TEST(TetrahedronVolume, Presets) {
  const double equi = tetrahedron_volume(equilateral());
  EXPECT_NEAR(equi, 3 * oracle::lobachevsky_quadrature(kPi / 3), 1e-12);
  EXPECT_NEAR(equi, 1.0149416064, 1e-9);
  const double right = tetrahedron_volume(right_angled());
  EXPECT_NEAR(right, 2 * oracle::lobachevsky_quadrature(kPi / 4), 1e-12);
  EXPECT_NEAR(right, 0.9159655942, 1e-9);
}

TEST(TetrahedronVolume, VanishesAtDegenerateLimit) {
  const double v = tetrahedron_volume(ConeDeficits::make(kTwoPi - 2e-9, 1e-9, 1e-9));
  EXPECT_GE(v, 0.0);
  EXPECT_LT(v, 1e-7);
}

TEST(TetrahedronVolume, MaximalAtEquilateral) {
  const double max = tetrahedron_volume(equilateral());
  testing::Gen gen(43);
  for (int n = 0; n < 10000; ++n) {
    const double v = tetrahedron_volume(gen.deficits(1e-9));
    ASSERT_GT(v, 0.0);
    ASSERT_LE(v, max + 1e-9);
  }
}

TEST(MonteCarlo, RejectsBadOptions) {
  MonteCarloOptions opts;
  opts.samples = 9999;
  try {
    monte_carlo_volume(equilateral(), opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadSampleCount);
  }
  opts.samples = 100000;
  for (double eps : {0.0, -1e-3, 0.2, std::nan("")}) {
    opts.truncation = eps;
    try {
      monte_carlo_volume(equilateral(), opts);
      FAIL() << eps;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::BadTruncation);
    }
  }
}

TEST(MonteCarlo, IndependentOfWorkerCount) {
  MonteCarloOptions opts;
  opts.samples = 1'000'003;
  opts.seed = 99;
  const auto base = monte_carlo_volume(right_angled(), opts);
  EXPECT_EQ(base.samples, opts.samples);
  EXPECT_EQ(base.seed, 99u);
  for (unsigned w : {1u, 2u, 3u, 8u}) {
    opts.workers = w;
    const auto est = monte_carlo_volume(right_angled(), opts);
    EXPECT_TRUE(same_bits(est.value, base.value)) << w;
    EXPECT_TRUE(same_bits(est.std_error, base.std_error)) << w;
    EXPECT_TRUE(same_bits(est.value_half_truncation, base.value_half_truncation)) << w;
  }
  opts.seed = 100;
  EXPECT_NE(monte_carlo_volume(right_angled(), opts).value, base.value);
}

TEST(MonteCarlo, WithinTwoPercentAtTenMillion) {
  for (const auto& d : {equilateral(), right_angled()}) {
    MonteCarloOptions opts;
    opts.seed = 20240611;
    opts.workers = 2;
    const auto est = monte_carlo_volume(d, opts);
    const double exact = tetrahedron_volume(d);
    EXPECT_LE(std::abs(est.value - exact) / exact, 0.02);
    EXPECT_LE(std::abs(est.value_half_truncation - exact) / exact, 0.02);
    EXPECT_LE(std::abs(est.value - est.value_half_truncation) / exact, 0.02);
    EXPECT_LE(std::abs(est.value - exact), 5 * est.std_error + 2e-3);
  }
}

TEST(MonteCarlo, StandardErrorShrinksLikeInverseRoot) {
  MonteCarloOptions small, large;
  small.samples = 100'000;
  large.samples = 10'000'000;
  small.seed = large.seed = 5;
  large.workers = 2;
  const auto a = monte_carlo_volume(equilateral(), small);
  const auto b = monte_carlo_volume(equilateral(), large);
  const double ratio = a.std_error / b.std_error;
  EXPECT_GT(ratio, 10.0 / 1.5);
  EXPECT_LT(ratio, 10.0 * 1.5);
}

} // namespace
} // namespace octa
