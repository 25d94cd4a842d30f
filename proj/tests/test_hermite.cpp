#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pdm/finite_difference.hpp"
#include "pdm/hermite.hpp"

using pdm::HermiteEvaluator;

TEST(Hermite, LowOrders) {
  EXPECT_EQ(HermiteEvaluator::value(0, 3.7), 1.0);
  EXPECT_EQ(HermiteEvaluator::value(1, 3.7), 7.4);
  EXPECT_EQ(HermiteEvaluator::derivative(0, 3.7), 0.0);
}

TEST(Hermite, MatchesExplicitPolynomialsAtRandomPoints) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> z(-4.0, 4.0);
  for (int i = 0; i < 100; ++i) {
    const double x = z(rng);
    for (unsigned n = 0; n <= 6; ++n) {
      const double ref = oracle::hermite_explicit(n, x);
      EXPECT_NEAR(HermiteEvaluator::value(n, x), ref, 1e-12 * std::max(1.0, std::abs(ref))) << n;
    }
  }
}

TEST(Hermite, DerivativeIdentity) {
  for (unsigned n = 1; n <= 12; ++n) {
    for (double x : {-2.5, -0.3, 0.0, 1.1, 3.0}) {
      EXPECT_EQ(HermiteEvaluator::derivative(n, x), 2.0 * n * HermiteEvaluator::value(n - 1, x));
      const double h = 1e-5;
      const double fd = (HermiteEvaluator::value(n, x + h) - HermiteEvaluator::value(n, x - h)) / (2 * h);
      EXPECT_NEAR(HermiteEvaluator::derivative(n, x), fd, 1e-6 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST(Hermite, ParityAndPair) {
  for (unsigned n = 0; n <= 9; ++n) {
    const double sign = n % 2 ? -1.0 : 1.0;
    EXPECT_EQ(HermiteEvaluator::value(n, -1.3), sign * HermiteEvaluator::value(n, 1.3));
    const auto [hn, hm1] = HermiteEvaluator::value_pair(n, 0.7);
    EXPECT_EQ(hn, HermiteEvaluator::value(n, 0.7));
    EXPECT_EQ(hm1, n == 0 ? 0.0 : HermiteEvaluator::value(n - 1, 0.7));
  }
}

TEST(FiniteDifference, StencilOrders) {
  std::vector<double> f;
  const double h = 0.01;
  for (int i = 0; i < 11; ++i) f.push_back(std::sin(i * h));
  const std::span<const double> s(f);
  const double x = 5 * h;
  EXPECT_NEAR(pdm::fd::first(s, 5, h, pdm::fd::Order::Second), std::cos(x), 2e-5);
  EXPECT_NEAR(pdm::fd::first(s, 5, h, pdm::fd::Order::Fourth), std::cos(x), 1e-9);
  EXPECT_NEAR(pdm::fd::second(s, 5, h, pdm::fd::Order::Second), -std::sin(x), 1e-5);
  EXPECT_NEAR(pdm::fd::second(s, 5, h, pdm::fd::Order::Fourth), -std::sin(x), 1e-7);
  EXPECT_EQ(pdm::fd::radius(pdm::fd::Order::Fourth), 2u);
}
