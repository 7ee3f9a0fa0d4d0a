#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "test_support.hpp"
#include "wavebc/error.hpp"
#include "wavebc/system_symbol.hpp"

namespace wavebc {
namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;

constexpr cdouble kI{0.0, 1.0};

SystemSpec random_system(std::mt19937_64& rng, int n, int dims) {
  std::vector<MatrixXd> b;
  for (int j = 0; j < dims; ++j) b.push_back(test::random_spd(rng, n, 0.2, 3.0));
  return SystemSpec::make(test::random_spd(rng, n, 0.2, 3.0), std::move(b));
}

bool is_upper_triangular(const MatrixXcd& t, double tol) {
  for (Eigen::Index i = 0; i < t.rows(); ++i)
    for (Eigen::Index j = 0; j < i; ++j)
      if (std::abs(t(i, j)) > tol) return false;
  return true;
}

TEST(SystemSymbol, SpdDetection) {
  EXPECT_TRUE(is_spd(MatrixXd::Identity(3, 3)));
  MatrixXd m(2, 2);
  m << 1.0, 2.0, 2.0, 1.0;
  EXPECT_FALSE(is_spd(m));
  m << 1.0, 0.5, 0.0, 1.0;
  EXPECT_FALSE(is_spd(m));
  EXPECT_FALSE(is_spd(MatrixXd::Zero(2, 2)));
  EXPECT_FALSE(is_spd(MatrixXd()));
}

TEST(SystemSymbol, ValidateRejectsBadSpecs) {
  MatrixXd bad(2, 2);
  bad << 1.0, 2.0, 2.0, 1.0;
  EXPECT_THROW(SystemSpec::make(bad, {MatrixXd::Identity(2, 2)}), InvalidArgument);
  EXPECT_THROW(SystemSpec::make(MatrixXd::Identity(2, 2), {bad}), InvalidArgument);
  EXPECT_THROW(SystemSpec::make(MatrixXd::Identity(2, 2), {}), InvalidArgument);
  EXPECT_THROW(SystemSpec::make(MatrixXd::Identity(2, 2), {MatrixXd::Identity(3, 3)}),
               InvalidArgument);
  SystemSpec sys = SystemSpec::make(MatrixXd::Identity(2, 2), {MatrixXd::Identity(2, 2)});
  sys.c1 = 2.0 * MatrixXd::Identity(2, 2);
  EXPECT_THROW(sys.validate(), InvalidArgument);
}

TEST(SystemSymbol, ScalarSymbolEigenvalues) {
  const double a = 2.0;
  const double b = 0.5;
  const SystemSpec sys = SystemSpec::make(MatrixXd::Constant(1, 1, a), {MatrixXd::Constant(1, 1, b)});
  const cdouble s(0.3, 1.2);
  const double w = 0.7;
  const std::vector<double> om{w};
  const FirstOrderSymbol sym = build_first_order_symbol(sys, s, om);
  const cdouble k = std::sqrt((s * s + b * w * w) / a);
  Eigen::ComplexEigenSolver<MatrixXcd> es(sym.m);
  std::vector<cdouble> ev{es.eigenvalues()(0), es.eigenvalues()(1)};
  std::sort(ev.begin(), ev.end(), [](cdouble x, cdouble y) { return x.real() < y.real(); });
  const cdouble kp = k.real() > 0 ? k : -k;
  EXPECT_LT(std::abs(ev[0] + kp), 1e-13);
  EXPECT_LT(std::abs(ev[1] - kp), 1e-13);
  EXPECT_THROW(build_first_order_symbol(sys, cdouble(0.0, 1.0), om), InvalidArgument);
}

TEST(SystemSymbol, SymbolSquaredIsBlockDiagonal) {
  std::mt19937_64 rng(41);
  const SystemSpec sys = random_system(rng, 3, 2);
  const cdouble s(0.4, -0.9);
  const std::vector<double> om{0.3, -1.1};
  const FirstOrderSymbol sym = build_first_order_symbol(sys, s, om);
  const MatrixXcd m2 = sym.m * sym.m;
  const MatrixXcd p =
      sys.a1.cast<cdouble>().inverse() *
      ((s * s) * MatrixXcd::Identity(3, 3) + sys.b_of(om).cast<cdouble>());
  EXPECT_LT((m2.topLeftCorner(3, 3) - p).norm(), 1e-12 * p.norm());
  EXPECT_LT((m2.bottomRightCorner(3, 3) - p).norm(), 1e-12 * p.norm());
  EXPECT_LT(m2.topRightCorner(3, 3).norm(), 1e-12 * p.norm());
}

TEST(SystemSymbol, EigenSplitCountsAndSchurForm) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> eta(0.05, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    const int dims = 1 + trial % 2;
    const SystemSpec sys = random_system(rng, n, dims);
    std::vector<double> om;
    for (int j = 0; j < dims; ++j) om.push_back(u(rng));
    const FirstOrderSymbol sym = build_first_order_symbol(sys, cdouble(eta(rng), u(rng)), om);
    const EigenSplit split = eigen_split(sym);
    EXPECT_EQ(split.n_minus, n);
    EXPECT_EQ(split.n_plus, n);
    EXPECT_EQ(split.schur.leading, n);
    EXPECT_LT(split.reconstruction_residual, 1e-12);
    const MatrixXcd& t = split.schur.t;
    const MatrixXcd& q = split.schur.u;
    EXPECT_TRUE(is_upper_triangular(t, 1e-13 * sym.m.norm()));
    EXPECT_LT((q.adjoint() * q - MatrixXcd::Identity(2 * n, 2 * n)).norm(), 1e-12);
    for (Eigen::Index i = 0; i < 2 * n; ++i) {
      EXPECT_EQ(t(i, i).real() < 0.0, i < n);
    }
  }
}

TEST(SystemSymbol, SwapSchurDiagonalPreservesProduct) {
  std::mt19937_64 rng(43);
  std::normal_distribution<double> g;
  MatrixXcd t = MatrixXcd::Zero(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) t(i, j) = cdouble(g(rng), g(rng));
  MatrixXcd u = MatrixXcd::Identity(4, 4);
  const MatrixXcd before = t;
  swap_schur_diagonal(t, u, 1);
  EXPECT_LT(std::abs(t(1, 1) - before(2, 2)), 1e-13);
  EXPECT_LT(std::abs(t(2, 2) - before(1, 1)), 1e-13);
  EXPECT_LT(std::abs(t(2, 1)), 1e-13);
  EXPECT_LT((u * t * u.adjoint() - before).norm(), 1e-13 * before.norm());
}

TEST(SystemSymbol, OrderedSchurKeepsRelativeOrder) {
  Eigen::VectorXcd d(5);
  d << cdouble(1.0, 0.0), cdouble(-2.0, 1.0), cdouble(3.0, 0.0), cdouble(-0.5, -1.0),
      cdouble(-4.0, 0.0);
  MatrixXcd m = d.asDiagonal();
  m(0, 4) = 0.3;
  m(1, 3) = -0.7;
  const OrderedSchur os = ordered_schur(m, [](cdouble x) { return x.real() < 0.0; });
  ASSERT_EQ(os.leading, 3);
  EXPECT_LT(std::abs(os.t(0, 0) - d(1)), 1e-12);
  EXPECT_LT(std::abs(os.t(1, 1) - d(3)), 1e-12);
  EXPECT_LT(std::abs(os.t(2, 2) - d(4)), 1e-12);
  EXPECT_LT((os.u * os.t * os.u.adjoint() - m).norm(), 1e-12);
}

TEST(SystemSymbol, ResolventNormMatchesScalarFormula) {
  const SystemSpec sys = SystemSpec::make(MatrixXd::Identity(1, 1), {MatrixXd::Identity(1, 1)});
  const std::vector<double> om{1.0};
  const FirstOrderSymbol sym = build_first_order_symbol(sys, cdouble(0.5, 0.2), om);
  for (double w1 : {-1.0, 0.0, 0.4, 3.0}) {
    Eigen::JacobiSVD<MatrixXcd> svd(sym.m - kI * w1 * MatrixXcd::Identity(2, 2));
    EXPECT_NEAR(resolvent_norm(sym, w1), 1.0 / svd.singularValues()(1), 1e-12);
  }
}

TEST(SystemSymbol, ResolventProductDominatesDenseScan) {
  std::mt19937_64 rng(44);
  const SystemSpec sys = random_system(rng, 2, 1);
  const std::vector<double> om{0.8};
  for (const cdouble s : {cdouble(0.3, 0.5), cdouble(0.05, 1.0), cdouble(1.0, -0.2)}) {
    const FirstOrderSymbol sym = build_first_order_symbol(sys, s, om);
    double scan = 0.0;
    for (int i = -20000; i <= 20000; ++i) {
      scan = std::max(scan, resolvent_norm(sym, i * 5e-4));
    }
    const double product = resolvent_product(sys, s, om);
    EXPECT_GE(product, scan * s.real() * (1.0 - 1e-9));
    EXPECT_LE(product, scan * s.real() * 1.05);
  }
}

TEST(SystemSymbol, ResolventProductBoundedNearAxis) {
  std::mt19937_64 rng(45);
  const SystemSpec sys = random_system(rng, 3, 1);
  const std::vector<double> om{0.6};
  for (double xi : {0.0, 0.3, 0.7, 2.0}) {
    for (double eta : {1e-1, 1e-2, 1e-3, 1e-4}) {
      const double r = resolvent_product(sys, cdouble(eta, xi), om);
      EXPECT_TRUE(std::isfinite(r));
      EXPECT_LT(r, 10.0);
    }
  }
}

TEST(SystemSymbol, HSpectrumMatchesGeneralizedEigenproblem) {
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 50; ++trial) {
    const SystemSpec sys = random_system(rng, 3, 2);
    std::normal_distribution<double> g;
    Eigen::Vector3d v(g(rng), g(rng), g(rng));
    v.normalize();
    const std::vector<double> om{v(1), v(2)};
    const HSpectrum h = h_spectrum(sys, om, v(0));
    const MatrixXd lhs = sys.b_of(om) - v(0) * v(0) * MatrixXd::Identity(3, 3);
    Eigen::GeneralizedSelfAdjointEigenSolver<MatrixXd> ges(lhs, sys.a1);
    const Eigen::VectorXd ref = ges.eigenvalues().reverse();
    EXPECT_LT((h.kappa_sq - ref).cwiseAbs().maxCoeff(), 1e-12);
    for (Eigen::Index j = 0; j + 1 < 3; ++j) EXPECT_GE(h.kappa_sq(j), h.kappa_sq(j + 1));
    EXPECT_LT((h.eigenvectors.transpose() * h.eigenvectors - MatrixXd::Identity(3, 3)).norm(),
              1e-12);
    for (Eigen::Index j = 0; j < 3; ++j) EXPECT_GT(h.a_diag(j), 0.0);
  }
  const SystemSpec sys = random_system(rng, 2, 1);
  const std::vector<double> om{0.5};
  EXPECT_THROW(h_spectrum(sys, om, 0.5), InvalidArgument);
}

TEST(SystemSymbol, HSpectrumDetectsZero) {
  MatrixXd a1(2, 2);
  a1 << 1.0, 0.0, 0.0, 2.0;
  const SystemSpec sys = SystemSpec::make(a1, {MatrixXd::Identity(2, 2)});
  const double x = std::sqrt(0.5);
  const std::vector<double> om{x};
  const HSpectrum h = h_spectrum(sys, om, x);
  EXPECT_TRUE(h.has_zero);
  EXPECT_EQ(h.split_index, 0);
}

TEST(SystemSymbol, BlockReductionIsSecondOrderInEta) {
  std::mt19937_64 rng(47);
  const SystemSpec sys = random_system(rng, 3, 1);
  const double xi = 0.6;
  const std::vector<double> om{0.8};
  const MatrixXd ais = Eigen::SelfAdjointEigenSolver<MatrixXd>(sys.a1).operatorInverseSqrt();
  auto error_at = [&](double eta) {
    const Eigen::VectorXcd approx = block_reduce(sys, om, xi, eta, 1e-3);
    const cdouble s(eta, xi);
    const MatrixXcd h = ais.cast<cdouble>() *
                        ((s * s) * MatrixXcd::Identity(3, 3) + sys.b_of(om).cast<cdouble>()) *
                        ais.cast<cdouble>();
    Eigen::ComplexEigenSolver<MatrixXcd> es(h);
    std::vector<cdouble> ev(es.eigenvalues().data(), es.eigenvalues().data() + 3);
    std::sort(ev.begin(), ev.end(), [](cdouble a, cdouble b) { return a.real() > b.real(); });
    double err = 0.0;
    for (int j = 0; j < 3; ++j) err = std::max(err, std::abs(approx(j) - ev[j]));
    return err;
  };
  const double e1 = error_at(1e-3);
  const double e2 = error_at(1e-4);
  EXPECT_LT(e1, 1e-4);
  EXPECT_NEAR(std::log10(e1 / e2), 2.0, 0.1);
  EXPECT_THROW(block_reduce(sys, om, xi, 2e-3, 1e-3), InvalidArgument);
  EXPECT_THROW(block_reduce(sys, om, xi, -1e-4, 1e-3), InvalidArgument);
}

TEST(SystemSymbol, BlockReductionRejectsCloseEigenvalues) {
  const SystemSpec sys =
      SystemSpec::make(MatrixXd::Identity(2, 2), {MatrixXd::Identity(2, 2)});
  const std::vector<double> om{0.8};
  EXPECT_THROW(block_reduce(sys, om, 0.6, 1e-4), DegenerateSpectrum);
}

TEST(SystemSymbol, ResolventSolutionAndBound) {
  std::mt19937_64 rng(48);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> eta(1e-3, 2.0);
  for (int trial = 0; trial < 500; ++trial) {
    const SystemSpec sys = random_system(rng, 1 + trial % 3, 1 + trial % 2);
    const double k = resolvent_bound_constant(sys);
    const cdouble s(eta(rng), u(rng));
    std::vector<double> om;
    double w2 = 0.0;
    for (std::size_t j = 0; j <= sys.tangential_dims(); ++j) {
      om.push_back(u(rng));
      w2 += om.back() * om.back();
    }
    Eigen::VectorXcd f = Eigen::VectorXcd::Random(sys.n());
    const Eigen::VectorXcd sol = resolvent_solution(sys, s, om, f);
    const MatrixXd p0 = sys.a1 * om[0] * om[0] +
                        sys.b_of(std::span<const double>(om).subspan(1));
    const Eigen::VectorXcd res =
        (s * s) * sol + p0.cast<cdouble>() * sol - f;
    EXPECT_LT(res.norm(), 1e-9 * f.norm() * (1.0 + sol.norm()));
    const double bound = k * f.norm() / (std::sqrt(std::norm(s) + w2) * s.real());
    EXPECT_LE(sol.norm(), bound * (1.0 + 1e-10));
  }
}

TEST(SystemSymbol, BoundConstantExample) {
  MatrixXd a1(2, 2);
  a1 << 0.25, 0.0, 0.0, 1.0;
  const SystemSpec sys = SystemSpec::make(a1, {MatrixXd::Identity(2, 2)});
  EXPECT_DOUBLE_EQ(resolvent_bound_constant(sys), 2.0);
  const SystemSpec wide =
      SystemSpec::make(4.0 * MatrixXd::Identity(2, 2), {3.0 * MatrixXd::Identity(2, 2)});
  EXPECT_DOUBLE_EQ(resolvent_bound_constant(wide), 1.0);
}

}  // namespace
}  // namespace wavebc
