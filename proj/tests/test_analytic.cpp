#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pdm/analytic.hpp"
#include "pdm/quadrature.hpp"

using namespace pdm;

namespace {
constexpr CaseId kCases[] = {CaseId::A, CaseId::B, CaseId::C};
}

TEST(EnergyLevel, ReferenceValues) {
  EXPECT_NEAR(energy_level(CaseId::A, 0, 0.1), 0.475624609862519643, 2e-16);
  EXPECT_NEAR(energy_level(CaseId::B, 0, 0.1), 0.430593710403917109, 2e-16);
  EXPECT_NEAR(energy_level(CaseId::C, 0, 0.1), 0.665535421758714587, 2e-16);
  // Hand evaluations of the printed closed forms.
  EXPECT_NEAR(energy_level(CaseId::A, 0, 0.1), 0.25 * (-0.1 + std::sqrt(4.01)), 1e-15);
  EXPECT_NEAR(energy_level(CaseId::B, 0, 0.1), 0.25 * (-0.3 + std::sqrt(4.09)), 1e-15);
  EXPECT_NEAR(energy_level(CaseId::C, 0, 0.1), 0.25 * (0.7 + std::sqrt(3.85)), 1e-15);
}

TEST(EnergyLevel, MatchesPrintedFormsAcrossLevels) {
  for (double g : {0.02, 0.1, 0.3}) {
    for (unsigned n = 0; n < 40; ++n) {
      const double N = 2.0 * n + 1.0;
      const double a = N / 4 * (-g * N + std::sqrt(4 + g * g * N * N));
      const double b = 0.25 * (-(2 + N * N) * g + N * std::sqrt(4 + g * g * (8 + N * N)));
      const double c = 0.25 * (-(-8 + N * N) * g + N * std::sqrt(4 * (1 - 4 * g * g) + g * g * N * N));
      EXPECT_NEAR(energy_level(CaseId::A, n, g), a, 1e-12 * a);
      EXPECT_NEAR(energy_level(CaseId::B, n, g), b, 1e-12 * b);
      EXPECT_NEAR(energy_level(CaseId::C, n, g), c, 1e-12 * c);
    }
  }
}

TEST(EnergyLevel, HarmonicLimitExact) {
  for (CaseId id : kCases) {
    for (unsigned n = 0; n <= 30; ++n) EXPECT_EQ(energy_level(id, n, 0.0), n + 0.5);
  }
}

TEST(EnergyLevel, ContinuousAtZeroDeformation) {
  for (CaseId id : kCases) {
    for (unsigned n = 0; n <= 20; ++n) EXPECT_LE(std::abs(energy_level(id, n, 1e-8) - (n + 0.5)), 1e-7 * (n + 1) * (n + 1));
  }
}

TEST(EnergyLevel, MonotoneAndBelowThreshold) {
  for (CaseId id : kCases) {
    for (double g : {0.001, 0.1, 0.3, 0.49, 0.75, 1.0}) {
      if (id == CaseId::C && g >= 0.5) continue;
      const double thr = energy_threshold(id, g);
      double prev = -1.0;
      for (unsigned n = 0; n <= 1000; ++n) {
        const double e = energy_level(id, n, g);
        ASSERT_GT(e, prev) << case_letter(id) << " g=" << g << " n=" << n;
        ASSERT_LT(e, thr) << case_letter(id) << " g=" << g << " n=" << n;
        prev = e;
      }
    }
  }
}

TEST(EnergyLevel, DomainErrors) {
  EXPECT_THROW(energy_level(CaseId::A, 0, -0.1), std::invalid_argument);
  // Case c: no admissible Gaussian width once gamma_tilde >= 1/2.
  EXPECT_THROW(energy_level(CaseId::C, 3, 0.5), DomainError);
  EXPECT_THROW(energy_level(CaseId::C, 0, 0.6), DomainError);
  EXPECT_NO_THROW(energy_level(CaseId::C, 0, 0.49));
}

TEST(Threshold, Values) {
  EXPECT_DOUBLE_EQ(energy_threshold(CaseId::A, 0.1), 5.0);
  EXPECT_DOUBLE_EQ(energy_threshold(CaseId::B, 0.1), 5.05);
  EXPECT_DOUBLE_EQ(energy_threshold(CaseId::C, 0.1), 5.0);
  for (double g : {0.05, 0.2, 0.7}) {
    EXPECT_NEAR(energy_threshold(CaseId::B, g) - energy_threshold(CaseId::A, g), g / 2, 1e-14);
  }
  EXPECT_THROW(energy_threshold(CaseId::A, 0.0), std::invalid_argument);
}

TEST(Asymptotics, GapConstants) {
  EXPECT_NEAR(asymptotic_gap(CaseId::A, 100, 0.1), 0.0125, 1e-15);
  EXPECT_EQ(asymptotic_gap(CaseId::C, 10, 0.5), 0.0);
  EXPECT_THROW(asymptotic_gap(CaseId::A, 0, 0.1), std::invalid_argument);
  EXPECT_THROW(asymptotic_gap(CaseId::B, 5, 0.0), std::invalid_argument);
  for (CaseId id : kCases) {
    for (double g : {0.05, 0.1, 0.2}) {
      const double gap = energy_threshold(id, g) - energy_level(id, 200, g);
      EXPECT_NEAR(gap / asymptotic_gap(id, 200, g), 1.0, 0.05) << case_letter(id) << " " << g;
    }
  }
}

TEST(Eigenfunction, UnnormalizedExamples) {
  EXPECT_NEAR(eigenfunction_eval(CaseId::A, 0, 0.0, 1.0).real(), std::exp(-0.5), 1e-16);
  EXPECT_EQ(eigenfunction_eval(CaseId::A, 1, 0.1, 0.0).real(), 0.0);
  EXPECT_EQ(eigenfunction_eval(CaseId::C, 0, 0.1, 0.0).real(), 1.0);
}

TEST(Eigenfunction, MatchesPrintedForms) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> yd(-4, 4);
  const double g = 0.1;
  for (unsigned n = 0; n <= 6; ++n) {
    for (int k = 0; k < 20; ++k) {
      const double y = yd(rng);
      const double ea = energy_level(CaseId::A, n, g);
      const double ra = 1 - 2 * g * ea;
      const double a = std::exp(-0.5 * y * y * std::sqrt(ra)) * HermiteEvaluator::value(n, y * std::pow(ra, 0.25));
      const double eb = energy_level(CaseId::B, n, g);
      const double rb = 1 + g * g - 2 * g * eb;
      const double b = std::exp(-0.5 * y * y * (-g + std::sqrt(rb))) * HermiteEvaluator::value(n, y * std::pow(rb, 0.25));
      const double ec = energy_level(CaseId::C, n, g);
      const double rc = 1 - 2 * g * ec;
      const double c = std::exp(2 * y * std::sqrt(g) - 0.5 * y * y * std::sqrt(rc)) *
                       HermiteEvaluator::value(n, y * std::pow(rc, 0.25));
      EXPECT_NEAR(eigenfunction_eval(CaseId::A, n, g, y).real(), a, 1e-12 * std::max(1.0, std::abs(a)));
      EXPECT_NEAR(eigenfunction_eval(CaseId::B, n, g, y).real(), b, 1e-12 * std::max(1.0, std::abs(b)));
      EXPECT_NEAR(eigenfunction_eval(CaseId::C, n, g, y).real(), c, 1e-12 * std::max(1.0, std::abs(c)));
    }
  }
}

TEST(EigenState, NormalizationAndMaps) {
  const Grid grid = default_normalization_grid();
  for (CaseId id : kCases) {
    for (unsigned n = 0; n <= 5; ++n) {
      const auto st = make_eigenstate(id, n, 0.1);
      const auto dens = sample(grid, [&](double y) { return st.density(y); });
      EXPECT_NEAR(quadrature(dens, grid), 1.0, 1e-12);
      for (double y : {-2.0, 0.0, 1.3}) {
        EXPECT_NEAR(st.omega_real(y), std::sqrt(st.gauge().value(y) * st.mass().m(y)) * st.psi_real(y),
                    1e-14 * std::max(1.0, std::abs(st.omega_real(y))));
        EXPECT_NEAR(st.phi(y).real(), st.gauge().value(y) * st.mass().m(y) * st.psi_real(y), 1e-14);
        EXPECT_EQ(st.psi(y).imag(), 0.0);
      }
      EXPECT_EQ(st.lambda(), 2 * st.energy());
    }
  }
}

TEST(EigenState, HarmonicGroundStateValues) {
  const auto st = make_eigenstate(CaseId::A, 0, 0.0);
  EXPECT_NEAR(st.psi_real(0.0), 0.7511255444649425, 1e-12);
  EXPECT_NEAR(st.omega_real(0.0), 0.7511255444649425, 1e-12);
  EXPECT_NEAR(st.density(0.0), 1.0 / std::sqrt(std::acos(-1.0)), 1e-12);
}

TEST(EigenState, CaseCOmegaHasNoLinearExponent) {
  for (unsigned n = 0; n <= 5; ++n) {
    const auto st = make_eigenstate(CaseId::C, n, 0.1);
    EXPECT_EQ(st.omega_exponent().linear, 0.0);
    EXPECT_NE(st.psi_exponent().linear, 0.0);
    auto norm_on = [&](double L) {
      const Grid g = Grid::with_spacing(-L, L, 1e-3);
      const auto v = sample(g, [&](double y) { return st.omega_real(y) * st.omega_real(y); });
      return quadrature(v, g);
    };
    const double n10 = norm_on(10.0), n14 = norm_on(14.0);
    EXPECT_LT(std::abs(n14 - n10) / n14, 1e-10);
  }
}

class OdeResidual : public ::testing::TestWithParam<std::tuple<CaseId, double>> {};

TEST_P(OdeResidual, OriginalAndDualBelowTolerance) {
  const auto [id, g] = GetParam();
  const Grid grid = Grid::with_spacing(-12, 12, 5e-4);
  for (unsigned n = 0; n <= 8; ++n) {
    const auto st = make_eigenstate(id, n, g);
    EXPECT_LE(original_residual(st, grid), 1e-6) << "n=" << n;
    EXPECT_LE(dual_residual(st, grid), 1e-6) << "n=" << n;
  }
}

INSTANTIATE_TEST_SUITE_P(Grid, OdeResidual,
                         ::testing::Combine(::testing::Values(CaseId::A, CaseId::B, CaseId::C),
                                            ::testing::Values(0.0, 0.05, 0.1)));

TEST(OdeResidual, DualResidualIsSecondOrderWithThreePointStencil) {
  for (CaseId id : kCases) {
    const auto st = make_eigenstate(id, 2, 0.1);
    const double r1 = dual_residual(st, Grid::with_spacing(-10, 10, 2e-2), fd::Order::Second);
    const double r2 = dual_residual(st, Grid::with_spacing(-10, 10, 1e-2), fd::Order::Second);
    EXPECT_NEAR(r1 / r2, 4.0, 0.2) << case_letter(id);
  }
}

TEST(OdeResidual, WrongEnergyIsDetected) {
  const auto good = make_eigenstate(CaseId::B, 1, 0.1);
  const auto bad = EigenState::build(CaseId::B, 1, 0.1, good.energy() + 1e-3);
  const Grid grid = Grid::with_spacing(-12, 12, 5e-4);
  EXPECT_GT(original_residual(bad, grid), 1e-4);
}

TEST(NegativeGamma, CaseBLevelsAndResiduals) {
  const double g = -0.1;
  EXPECT_NEAR(negative_gamma_state(CaseId::B, 0, g).energy(), 0.580593710403917109, 1e-15);
  EXPECT_NEAR(negative_gamma_energy(CaseId::B, 0, g), 0.25 * (0.3 + std::sqrt(4.09)), 1e-15);
  const Grid gate = confined_residual_grid(g);
  for (unsigned n = 0; n <= 6; ++n) {
    const auto st = negative_gamma_state(CaseId::B, n, g);
    EXPECT_LE(dual_residual(st, gate), 1e-6);
    EXPECT_LE(original_residual(st, gate), 1e-6);
  }
  const double e = negative_gamma_energy(CaseId::B, 500, g);
  EXPECT_NEAR(e / (2 * 0.1 * 500.0 * 500.0), 1.0, 0.02);
}

TEST(NegativeGamma, DomainAndGating) {
  const auto st = negative_gamma_state(CaseId::B, 0, -0.25);
  EXPECT_THROW(st.psi_real(2.0), DomainError);
  EXPECT_THROW(st.psi_real(-2.5), DomainError);
  EXPECT_NO_THROW(st.psi_real(1.9));
  EXPECT_THROW(negative_gamma_state(CaseId::B, 0, 0.1), std::invalid_argument);
  EXPECT_NO_THROW(negative_gamma_state(CaseId::A, 2, -0.1));
  try {
    negative_gamma_state(CaseId::C, 0, -0.1);
    FAIL() << "case c continuation should not verify";
  } catch (const UnverifiedContinuation& e) {
    EXPECT_GT(e.residual(), 1e-6);
  }
}

TEST(Quadrature, Basics) {
  const Grid g = Grid::make(-10, 10, 2001);
  const auto gauss = sample(g, [](double y) { return std::exp(-y * y); });
  EXPECT_NEAR(quadrature(gauss, g), std::sqrt(std::acos(-1.0)), 1e-10);
  const Grid u = Grid::make(0, 2, 21);
  const auto cubic = sample(u, [](double y) { return y * y * y - y + 1; });
  EXPECT_NEAR(quadrature(cubic, u), 4.0 - 2.0 + 2.0, 1e-13 * 4.0);
  EXPECT_NEAR(quadrature(sample(u, [](double) { return 1.0; }), u, [](double y) { return y; }), 2.0, 1e-13);
  std::vector<double> two{1.0, 2.0};
  EXPECT_THROW(integrate_uniform<double>(two, 0.1), std::invalid_argument);
  const Grid even = Grid::make(0, 1, 10);
  EXPECT_NEAR(quadrature(sample(even, [](double y) { return y; }), even), 0.5, 1e-15);
}
