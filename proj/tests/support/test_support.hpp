#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace wavebc::test {

/// sqrt(s^2 + omega^2) via the polar form sqrt(rho) e^{i theta/2}.
inline std::complex<double> polar_kappa(std::complex<double> s, double omega) {
  const double a = omega * omega + s.real() * s.real() - s.imag() * s.imag();
  const double b = 2.0 * s.real() * s.imag();
  const double rho = std::hypot(a, b);
  double theta = std::atan2(b, a);
  if (b == 0.0 && a < 0.0) theta = std::numbers::pi;
  return std::polar(std::sqrt(rho), theta / 2.0);
}

/// Random symmetric positive definite matrix with eigenvalues in [lo, hi].
inline Eigen::MatrixXd random_spd(std::mt19937_64& rng, int n, double lo = 0.2, double hi = 5.0) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = g(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  const Eigen::MatrixXd q = qr.householderQ();
  std::uniform_real_distribution<double> u(lo, hi);
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) d(i) = u(rng);
  Eigen::MatrixXd out = q * d.asDiagonal() * q.transpose();
  return 0.5 * (out + out.transpose());
}

/// Least-squares slope of log(y) against log(x).
inline double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
    sxy += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
  }
  return sxy / sxx;
}

}  // namespace wavebc::test
