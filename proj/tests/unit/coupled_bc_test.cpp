#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "wavebc/coupled_bc.hpp"
#include "wavebc/error.hpp"

namespace wavebc {
namespace {

constexpr cdouble kI{0.0, 1.0};

TEST(CoupledBC, DeterminantExamples) {
  EXPECT_EQ(coupled_determinant({1.0, -1.0}, DualPoint{{0.0, 0.0}, 3.0}), cdouble(0.0));
  const double p = -0.25;
  const cdouble s = kI * std::sqrt(1.0 + p);
  EXPECT_LT(std::abs(coupled_determinant({0.5, -0.5}, DualPoint{s, 1.0})), 1e-15);
  EXPECT_EQ(coupled_determinant({0.3, 0.7}, DualPoint{{1.0, 0.0}, 0.0}), cdouble(1.0));
  EXPECT_THROW(coupled_determinant({0.3, 0.7}, DualPoint{{-1.0, 0.0}, 0.0}), InvalidArgument);
}

TEST(CoupledBC, DeterminantEqualsKappaSquaredForm) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> eta(0.0, 3.0);
  for (int i = 0; i < 1000; ++i) {
    const CoupledBC cb{u(rng), u(rng)};
    const DualPoint p{{eta(rng), u(rng)}, u(rng)};
    const cdouble k = kappa(p).value;
    const cdouble ref = k * k + p.omega * p.omega * cb.b1 * cb.b2;
    EXPECT_LE(std::abs(coupled_determinant(cb, p) - ref), 1e-12 * (1.0 + std::abs(ref)));
  }
}

TEST(CoupledBC, FiveCases) {
  const StabilityReport ill = classify_coupled({2.0, -1.0});
  EXPECT_EQ(ill.classification, StabilityClass::IllPosed);
  ASSERT_EQ(ill.eigenvalues.size(), 1u);
  // s = sqrt(-(1+p)) |omega| with p = -2, normalized.
  const DualPoint e = ill.eigenvalues.front();
  EXPECT_NEAR(e.s.real() / e.omega, 1.0, 1e-14);
  EXPECT_NEAR(std::norm(e.s) + e.omega * e.omega, 1.0, 1e-14);

  const StabilityReport deg = classify_coupled({1.0, -1.0});
  EXPECT_EQ(deg.classification, StabilityClass::Degenerate);
  ASSERT_EQ(deg.generalized_eigenvalues.size(), 1u);
  EXPECT_EQ(deg.generalized_eigenvalues.front().xi0_prime, 0.0);
  EXPECT_NE(deg.notes.find("d^2/dt^2"), std::string::npos);

  const StabilityReport surf = classify_coupled({0.5, -0.5});
  EXPECT_EQ(surf.classification, StabilityClass::Stable);
  ASSERT_EQ(surf.generalized_eigenvalues.size(), 2u);
  for (const auto& g : surf.generalized_eigenvalues) EXPECT_EQ(g.wave_kind, WaveKind::Surface);

  const StabilityReport glance = classify_coupled({0.0, 3.0});
  EXPECT_EQ(glance.classification, StabilityClass::Stable);
  for (const auto& g : glance.generalized_eigenvalues) EXPECT_EQ(g.wave_kind, WaveKind::Glancing);

  const StabilityReport osc = classify_coupled({0.5, 0.5});
  EXPECT_EQ(osc.classification, StabilityClass::Unstable);
  for (const auto& g : osc.generalized_eigenvalues) EXPECT_EQ(g.wave_kind, WaveKind::Oscillatory);
}

TEST(CoupledBC, GeneralizedEigenvaluesZeroTheDeterminant) {
  for (double p : {-0.9, -0.25, 0.0, 0.3, 4.0}) {
    const CoupledBC cb{1.0, p};
    for (const auto& g : classify_coupled(cb).generalized_eigenvalues) {
      const double x = g.xi0_prime;
      const double w = g.omega0_prime;
      EXPECT_NEAR(x * x + w * w, 1.0, 1e-14);
      EXPECT_NEAR(-x * x + w * w * (1.0 + p), 0.0, 1e-14);
      EXPECT_LE(std::abs(g.kappa0_prime * g.kappa0_prime - (w * w - x * x)), 1e-14);
      EXPECT_EQ(classify_wave(g.kappa0_prime), g.wave_kind);
    }
  }
}

TEST(CoupledBC, ClassificationDependsOnProductOnly) {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 500; ++i) {
    const CoupledBC cb{u(rng), u(rng)};
    EXPECT_EQ(classify_coupled(cb).classification,
              classify_coupled({cb.b1 * cb.b2, 1.0}).classification);
  }
}

TEST(CoupledBC, BoundarySolutionExamples) {
  const auto zero = coupled_boundary_solution({0.3, 0.4}, 0.0, 0.0, DualPoint{{1.0, 0.0}, 2.0});
  EXPECT_EQ(zero.first, cdouble(0.0));
  EXPECT_EQ(zero.second, cdouble(0.0));

  const auto neumann = coupled_boundary_solution({0.0, 0.0}, 1.0, 0.0, DualPoint{{1.0, 0.0}, 0.0});
  EXPECT_NEAR(std::abs(neumann.first - cdouble(-1.0)), 0.0, 1e-15);
  EXPECT_EQ(neumann.second, cdouble(0.0));
}

TEST(CoupledBC, BoundarySolutionSatisfiesTheSystem) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> eta(0.05, 2.0);
  for (int i = 0; i < 1000; ++i) {
    const CoupledBC cb{u(rng), u(rng)};
    const DualPoint p{{eta(rng), u(rng)}, u(rng)};
    const cdouble g1(u(rng), u(rng));
    const cdouble g2(u(rng), u(rng));
    std::pair<cdouble, cdouble> sol;
    try {
      sol = coupled_boundary_solution(cb, g1, g2, p);
    } catch (const SingularBoundarySystem&) {
      continue;
    }
    // -kappa u1 + i omega b1 u2 = g1, -kappa u2 + i omega b2 u1 = g2.
    const cdouble k = kappa(p).value;
    const cdouble r1 = -k * sol.first + kI * p.omega * cb.b1 * sol.second - g1;
    const cdouble r2 = -k * sol.second + kI * p.omega * cb.b2 * sol.first - g2;
    const double scale = std::abs(g1) + std::abs(g2);
    EXPECT_LE(std::abs(r1), 1e-10 * scale);
    EXPECT_LE(std::abs(r2), 1e-10 * scale);
  }
}

TEST(CoupledBC, SingularPointsThrow) {
  EXPECT_THROW(coupled_boundary_solution({1.0, -1.0}, 1.0, 0.0, DualPoint{{0.0, 0.0}, 1.0}),
               SingularBoundarySystem);
  const cdouble s = kI * std::sqrt(0.75);
  EXPECT_THROW(coupled_boundary_solution({0.5, -0.5}, 1.0, 1.0, DualPoint{s, 1.0}),
               SingularBoundarySystem);
}

}  // namespace
}  // namespace wavebc
