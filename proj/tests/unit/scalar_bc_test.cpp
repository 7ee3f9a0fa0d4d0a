#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "wavebc/error.hpp"
#include "wavebc/scalar_bc.hpp"

namespace wavebc {
namespace {

std::vector<double> eta_samples() {
  std::vector<double> out;
  for (int i = 0; i < 9; ++i) out.push_back(1e-3 * std::pow(10.0, -0.5 * i));
  return out;
}

TEST(ScalarBC, FactoriesEnforceLegalCoefficients) {
  EXPECT_NO_THROW(ScalarBC::type1(1.0, 0.5));
  EXPECT_THROW(ScalarBC::type1(0.0, 0.5), InvalidArgument);
  EXPECT_THROW(ScalarBC::type1(1.0, 1.0), InvalidArgument);
  EXPECT_THROW(ScalarBC::type2(0.0), InvalidArgument);
  EXPECT_THROW(ScalarBC::type2(1.0), InvalidArgument);
  EXPECT_THROW(ScalarBC::type4(0.0), InvalidArgument);
  EXPECT_NO_THROW(ScalarBC::type4(3.0));
  EXPECT_THROW(ScalarBC::type1_wrong_sign(1.0, 0.0), InvalidArgument);
  EXPECT_TRUE(ScalarBC::type1_wrong_sign(-1.0, 0.0).flagged_illegal());
  EXPECT_FALSE(ScalarBC::type1(1.0, 0.0).flagged_illegal());
}

TEST(ScalarBC, SymbolExamples) {
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_EQ(boundary_symbol(ScalarBC::type3(), NormalizedDualPoint{{0.0, r}, r}), cdouble(0.0));
  EXPECT_EQ(boundary_symbol(ScalarBC::type1(1.0, 0.0), NormalizedDualPoint{{1.0, 0.0}, 0.0}),
            cdouble(2.0));
  EXPECT_THROW(boundary_symbol(ScalarBC::type3(), NormalizedDualPoint{{-0.1, 0.5}, 0.5}),
               InvalidArgument);
}

TEST(ScalarBC, SymbolIsHomogeneous) {
  const ScalarBC bc = ScalarBC::type1(0.7, -0.3);
  const DualPoint p{{0.4, -1.3}, 2.2};
  const auto [q, scale] = normalize(p);
  EXPECT_LE(std::abs(boundary_symbol(bc, p) - scale * boundary_symbol(bc, q)), 1e-14);
}

TEST(ScalarBC, Type2ClosedFormAtBPointSix) {
  const auto ge = generalized_eigenvalues(ScalarBC::type2(0.6));
  ASSERT_EQ(ge.size(), 2u);
  for (const auto& g : ge) {
    // Oracle: xi' = 0.8 omega' on the unit circle.
    const double w = 1.0 / std::sqrt(1.0 + 0.64);
    EXPECT_NEAR(g.omega0_prime, w, 1e-15);
    EXPECT_NEAR(std::abs(g.xi0_prime), 0.8 * w, 1e-15);
    EXPECT_NEAR(g.omega0_prime, 0.780869, 1e-6);
    EXPECT_NEAR(std::abs(g.xi0_prime), 0.624695, 1e-6);
    EXPECT_NEAR(g.kappa0_prime.real(), 0.468521, 1e-6);
    EXPECT_EQ(g.wave_kind, WaveKind::Surface);
    EXPECT_LT(std::abs(boundary_symbol(ScalarBC::type2(0.6), g.point())), 1e-12);
  }
  EXPECT_NE(ge[0].xi0_prime, ge[1].xi0_prime);
}

TEST(ScalarBC, Type3AndType1ClosedForms) {
  EXPECT_TRUE(generalized_eigenvalues(ScalarBC::type1(2.0, 0.3)).empty());
  const auto ge = generalized_eigenvalues(ScalarBC::type3());
  ASSERT_EQ(ge.size(), 2u);
  for (const auto& g : ge) {
    EXPECT_NEAR(std::abs(g.xi0_prime), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(g.omega0_prime, 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_EQ(g.kappa0_prime, cdouble(0.0));
    EXPECT_EQ(g.wave_kind, WaveKind::Glancing);
  }
}

TEST(ScalarBC, Type4ClosedForm) {
  const double b = 0.5;
  const auto ge = generalized_eigenvalues(ScalarBC::type4(b));
  ASSERT_EQ(ge.size(), 2u);
  for (const auto& g : ge) {
    EXPECT_NEAR(g.omega0_prime * g.omega0_prime * (2.0 + b * b), 1.0, 1e-14);
    EXPECT_NEAR(std::abs(g.xi0_prime), std::sqrt(1.0 + b * b) * std::abs(g.omega0_prime), 1e-14);
    EXPECT_LT(g.xi0_prime * b * g.omega0_prime, 0.0);
    EXPECT_NEAR(std::abs(g.kappa0_prime - cdouble(0.0, -g.omega0_prime * b)), 0.0, 1e-15);
    EXPECT_EQ(g.wave_kind, WaveKind::Oscillatory);
  }
}

TEST(ScalarBC, ClosedFormsZeroTheSymbolForRandomCoefficients) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> sub1(-0.999, 0.999);
  std::uniform_real_distribution<double> any(-20.0, 20.0);
  for (int i = 0; i < 100; ++i) {
    double b2 = sub1(rng);
    double b4 = any(rng);
    if (b2 == 0.0) b2 = 0.5;
    if (b4 == 0.0) b4 = 1.0;
    for (const ScalarBC& bc : {ScalarBC::type2(b2), ScalarBC::type3(), ScalarBC::type4(b4)}) {
      for (const auto& g : generalized_eigenvalues(bc)) {
        EXPECT_NEAR(g.xi0_prime * g.xi0_prime + g.omega0_prime * g.omega0_prime, 1.0, 1e-14);
        EXPECT_LT(std::abs(boundary_symbol(bc, g.point())), 1e-12) << bc.describe();
        EXPECT_EQ(classify_wave(g.kappa0_prime), g.wave_kind);
      }
    }
  }
}

TEST(ScalarBC, EigenvalueSearchLegalTypesEmpty) {
  EXPECT_TRUE(eigenvalue_search(ScalarBC::type2(0.5), 32).empty());
  EXPECT_TRUE(eigenvalue_search(ScalarBC::type3(), 32).empty());
  EXPECT_TRUE(eigenvalue_search(ScalarBC::type4(0.5), 32).empty());
  EXPECT_TRUE(eigenvalue_search(ScalarBC::type1(2.0, 0.3), 32).empty());
  EXPECT_TRUE(eigenvalue_search(ScalarBC::type1(0.2, -0.9), 32).empty());
  EXPECT_THROW(eigenvalue_search(ScalarBC::type3(), 8), InvalidArgument);
}

TEST(ScalarBC, EigenvalueSearchFindsWrongSignZeros) {
  EXPECT_FALSE(eigenvalue_search(ScalarBC::type1_wrong_sign(-1.0, 0.0), 32).empty());

  // s + a kappa = 0 with b = 0: s = |a| |omega| / sqrt(1 - a^2), real.
  const double a = -0.5;
  const auto zeros = eigenvalue_search(ScalarBC::type1_wrong_sign(a, 0.0), 32);
  ASSERT_FALSE(zeros.empty());
  for (const DualPoint& z : zeros) {
    const double expected = std::abs(a) * std::abs(z.omega) / std::sqrt(1.0 - a * a);
    EXPECT_NEAR(z.s.real(), expected, 1e-7);
    EXPECT_NEAR(z.s.imag(), 0.0, 1e-7);
    EXPECT_GT(z.s.real(), 0.0);
  }
}

TEST(ScalarBC, NoZerosInTheOpenRightHalfPlane) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const std::vector<ScalarBC> bcs = {ScalarBC::type1(1.0, 0.0), ScalarBC::type1(0.1, 0.95),
                                     ScalarBC::type2(0.6),      ScalarBC::type2(-0.99),
                                     ScalarBC::type3(),         ScalarBC::type4(0.5),
                                     ScalarBC::type4(-3.0)};
  for (const ScalarBC& bc : bcs) {
    for (int i = 0; i < 10000; ++i) {
      const double eta = std::pow(10.0, -6.0 * uni(rng));
      const double phi = 2.0 * std::numbers::pi * uni(rng);
      const double rest = std::sqrt(1.0 - eta * eta);
      const NormalizedDualPoint q{{eta, rest * std::cos(phi)}, rest * std::sin(phi)};
      EXPECT_GT(std::abs(boundary_symbol(bc, q)), 0.0);
    }
  }
}

TEST(ScalarBC, PerturbationSlopes) {
  const auto eta = eta_samples();
  {
    const ScalarBC bc = ScalarBC::type2(0.6);
    const SlopeFit fit = perturbation_slope(bc, generalized_eigenvalues(bc).front(), eta);
    EXPECT_NEAR(fit.order, 1.0, 0.02);
    EXPECT_NEAR(fit.constant / (0.8 / 0.6), 1.0, 0.02);
  }
  {
    const ScalarBC bc = ScalarBC::type4(1.0);
    for (const auto& g : generalized_eigenvalues(bc)) {
      const SlopeFit fit = perturbation_slope(bc, g, eta);
      EXPECT_NEAR(fit.order, 1.0, 0.02);
      EXPECT_NEAR(fit.constant / std::sqrt(2.0), 1.0, 0.02);
    }
  }
  {
    const ScalarBC bc = ScalarBC::type3();
    const SlopeFit fit = perturbation_slope(bc, generalized_eigenvalues(bc).front(), eta);
    EXPECT_NEAR(fit.order, 0.5, 0.02);
    EXPECT_NEAR(fit.constant, std::pow(2.0, 0.25), 0.02);
  }
}

TEST(ScalarBC, PerturbationSlopeRejectsBadSamples) {
  const ScalarBC bc = ScalarBC::type3();
  const auto g = generalized_eigenvalues(bc).front();
  EXPECT_THROW(perturbation_slope(bc, g, std::vector<double>{}), InvalidArgument);
  EXPECT_THROW(perturbation_slope(bc, g, std::vector<double>{1e-4, 1e-3}), InvalidArgument);
  EXPECT_THROW(perturbation_slope(bc, g, std::vector<double>{0.1, 1e-3}), InvalidArgument);
  EXPECT_THROW(perturbation_slope(bc, g, std::vector<double>{1e-3, -1e-4}), InvalidArgument);
}

TEST(ScalarBC, Classification) {
  const StabilityReport t1 = classify_scalar(ScalarBC::type1(1.0, 0.0));
  EXPECT_EQ(t1.classification, StabilityClass::StronglyBoundaryStable);
  EXPECT_TRUE(t1.generalized_eigenvalues.empty());
  EXPECT_EQ(classify_scalar(ScalarBC::type4(0.5)).classification, StabilityClass::Unstable);
  EXPECT_EQ(classify_scalar(ScalarBC::type2(0.5)).classification, StabilityClass::Stable);

  const StabilityReport t3 = classify_scalar(ScalarBC::type3());
  EXPECT_EQ(t3.classification, StabilityClass::Stable);
  ASSERT_EQ(t3.generalized_eigenvalues.size(), 2u);
  for (const auto& g : t3.generalized_eigenvalues) EXPECT_EQ(g.wave_kind, WaveKind::Glancing);

  const StabilityReport bad = classify_scalar(ScalarBC::type1_wrong_sign(-1.0, 0.0));
  EXPECT_EQ(bad.classification, StabilityClass::IllPosed);
  EXPECT_FALSE(bad.eigenvalues.empty());
  EXPECT_FALSE(bad.estimates.has_value());
}

TEST(ScalarBC, EstimateExponents) {
  const auto e2 = classify_scalar(ScalarBC::type2(0.3)).estimates;
  ASSERT_TRUE(e2.has_value());
  EXPECT_EQ(e2->boundary_eta, -2.0);
  EXPECT_EQ(e2->interior_freq, -0.5);
  const auto e3 = classify_scalar(ScalarBC::type3()).estimates;
  EXPECT_EQ(e3->boundary_freq, -0.5);
  EXPECT_EQ(e3->interior_eta, -1.5);
  const auto e4 = classify_scalar(ScalarBC::type4(2.0)).estimates;
  EXPECT_EQ(e4->interior_eta, -3.0);
}

}  // namespace
}  // namespace wavebc
