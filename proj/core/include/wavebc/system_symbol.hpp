#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "wavebc/branch.hpp"
#include "wavebc/schur_split.hpp"

namespace wavebc {

/// Constant-coefficient system u_tt = A1 u_xx + sum_j B_j u_{y_j y_j} on x > 0
/// with boundary operator C1 u_x + C0 u_t + sum_j C_j u_{y_j}.
struct SystemSpec {
  Eigen::MatrixXd a1;
  std::vector<Eigen::MatrixXd> b;
  Eigen::MatrixXd c0;
  std::vector<Eigen::MatrixXd> c;
  Eigen::MatrixXd c1;

  /// Builds a spec with C1 = I and zero C0, C_j, then validates it.
  static SystemSpec make(Eigen::MatrixXd a1, std::vector<Eigen::MatrixXd> b);

  Eigen::Index n() const { return a1.rows(); }
  std::size_t tangential_dims() const { return b.size(); }

  /// Throws InvalidArgument unless A1 and every B_j are symmetric positive
  /// definite (smallest eigenvalue > 1e-10 x largest), shapes agree and C1 = I.
  void validate() const;

  /// B(omega_-) = sum_j B_j omega_j^2.
  Eigen::MatrixXd b_of(std::span<const double> omega_minus) const;
};

/// True when m is symmetric with smallest eigenvalue > 1e-10 x largest.
bool is_spd(const Eigen::MatrixXd& m);

/// M(s, omega_-) = [[0, R I], [A1^{-1}(s^2 I + B(omega_-)) / R, 0]],
/// R = sqrt(|s|^2 + |omega_-|^2).
struct FirstOrderSymbol {
  Eigen::MatrixXcd m;
  cdouble s;
  std::vector<double> omega_minus;
};

FirstOrderSymbol build_first_order_symbol(const SystemSpec& sys, cdouble s,
                                          std::span<const double> omega_minus);

struct EigenSplit {
  Eigen::Index n_minus = 0;
  Eigen::Index n_plus = 0;
  /// Unitary U and triangular T with M = U T U^*, eigenvalues with Re < 0 first.
  OrderedSchur schur;
  /// ||U T U^* - M|| / ||M|| (Frobenius).
  double reconstruction_residual = 0.0;
};

/// Throws SplitFailure if some eigenvalue has |Re kappa| < 1e-10 ||M||.
EigenSplit eigen_split(const FirstOrderSymbol& sym);

/// ||(M - i omega1 I)^{-1}||_2.
double resolvent_norm(const FirstOrderSymbol& sym, double omega1);

/// sup over real omega1 of Re s ||(M - i omega1 I)^{-1}||_2. The sup is taken
/// over a grid on [-2||M||, 2||M||] plus the imaginary parts of the eigenvalues,
/// refined locally around the largest samples.
double resolvent_product(const SystemSpec& sys, cdouble s, std::span<const double> omega_minus);

struct HSpectrum {
  /// Eigenvalues of H, sorted in decreasing order.
  Eigen::VectorXd kappa_sq;
  /// Diagonal of U^T A1^{-1} U in the same order.
  Eigen::VectorXd a_diag;
  /// Orthonormal eigenvectors U of H (columns).
  Eigen::MatrixXd eigenvectors;
  /// Number of eigenvalues above the zero tolerance.
  Eigen::Index split_index = 0;
  bool has_zero = false;
};

inline constexpr double kHZeroTol = 1e-10;

/// Spectrum of H = A1^{-1/2}(-xi0'^2 I + B(omega_-')) A1^{-1/2}. The point
/// (xi0', omega_-') must lie on the unit sphere.
HSpectrum h_spectrum(const SystemSpec& sys, std::span<const double> omega_minus_prime,
                     double xi0_prime);

/// kappa_j'^2(omega_-', i xi') + 2 i a_jj xi' eta' for each eigenvalue of H.
/// Throws DegenerateSpectrum when two eigenvalues of H are closer than min_gap
/// and InvalidArgument unless 0 <= eta' <= min_gap.
Eigen::VectorXcd block_reduce(const SystemSpec& sys, std::span<const double> omega_minus_prime,
                              double xi_prime, double eta_prime, double min_gap = 1e-3);

/// Solves (s^2 I + A1 omega_1^2 + sum_j B_j omega_{j+1}^2) u = f. omega holds
/// the normal wavenumber followed by the tangential ones. Requires Re s > 0.
Eigen::VectorXcd resolvent_solution(const SystemSpec& sys, cdouble s,
                                    std::span<const double> omega, const Eigen::VectorXcd& f);

/// K in |u| <= K |f| / (sqrt(|s|^2 + |omega|^2) Re s): max(1, 1/sqrt(lambda_min))
/// with lambda_min the smallest eigenvalue among A1 and the B_j.
double resolvent_bound_constant(const SystemSpec& sys);

}  // namespace wavebc
