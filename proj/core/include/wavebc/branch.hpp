#pragma once

#include <complex>
#include <utility>

namespace wavebc {

using cdouble = std::complex<double>;

/// A Laplace-Fourier point: Laplace frequency s = eta + i*xi and tangential
/// wavenumber omega.
struct DualPoint {
  cdouble s;
  double omega = 0.0;

  double eta() const { return s.real(); }
  double xi() const { return s.imag(); }
  /// sqrt(|s|^2 + omega^2)
  double scale() const;
};

/// Dual point scaled onto the unit sphere |s'|^2 + omega'^2 = 1.
struct NormalizedDualPoint {
  cdouble s_prime;
  double omega_prime = 0.0;

  /// Point on the imaginary axis s' = i*xi', used for generalized eigenvalues.
  static NormalizedDualPoint on_axis(double xi_prime, double omega_prime) {
    return {cdouble(0.0, xi_prime), omega_prime};
  }
};

/// kappa = sqrt(s^2 + omega^2) together with the argument of s^2 + omega^2.
struct Kappa {
  cdouble value;
  double branch_arg = 0.0;  // in (-pi, pi]
};

/// sqrt(a + ib) with -pi < arg(a + ib) <= pi and arg sqrt = arg / 2.
/// A negative real argument (b == 0, a < 0) maps onto the positive imaginary axis
/// regardless of the sign of the zero in b.
cdouble branch_sqrt(double a, double b);

/// kappa = sqrt(s^2 + omega^2) on the fixed branch. Continuous away from the cut
/// arg(s^2 + omega^2) = pi; points on the cut map to arg kappa = pi/2.
/// Throws InvalidArgument at the origin.
Kappa kappa(const DualPoint& p);

/// kappa' = sqrt(s'^2 + omega'^2) for a normalized point.
cdouble kappa(const NormalizedDualPoint& q);

/// Limit of kappa' as Re s' -> 0+ with xi', omega' fixed. Coincides with kappa()
/// for Re s' > 0; on the imaginary axis it picks the root continuous from the
/// right half plane, i.e. i*sign(xi')*sqrt(xi'^2 - omega'^2) when xi'^2 > omega'^2.
cdouble kappa_from_right(const NormalizedDualPoint& q);

/// Returns the normalized point and the scale sqrt(|s|^2 + omega^2).
std::pair<NormalizedDualPoint, double> normalize(const DualPoint& p);

DualPoint denormalize(const NormalizedDualPoint& q, double scale);

/// Constants delta_1..delta_6 of the lower bounds for kappa, parameterized by
/// delta in (0, 1).
struct BoundConstants {
  double delta = 0.5;
  double delta1 = 0.0;
  double delta2 = 0.0;
  double delta3 = 0.0;
  double delta4 = 0.0;
  double delta6 = 0.0;

  static BoundConstants make(double delta);
};

/// One evaluated inequality lhs >= rhs. Inactive entries (case conditions not met)
/// report holds() == true.
struct Inequality {
  double lhs = 0.0;
  double rhs = 0.0;
  bool active = true;

  bool holds(double rel_tol = 1e-12) const {
    return !active || lhs >= rhs * (1.0 - rel_tol) - 1e-300;
  }
};

struct BoundReport {
  cdouble kappa;
  double abs_kappa = 0.0;
  double re_kappa = 0.0;

  // sqrt(a+ib) with a = omega^2 + eta^2 - xi^2, b = 2 xi eta.
  Inequality modulus_lower;      // |kappa| >= 2^{-1/4} sqrt(|a|+|b|)
  Inequality modulus_upper;      // sqrt(|a|+|b|) >= |kappa|
  Inequality real_part_nonneg_a; // Re kappa >= 2^{-3/4} sqrt(|a|+|b|), a >= 0
  Inequality real_part_neg_a;    // Re kappa >= |b| / (2 sqrt(|a|+|b|)), a <= 0

  Inequality kappa_piecewise;    // |kappa| >= delta1*R or delta2*sqrt(R*eta)
  Inequality kappa_vs_eta;       // |kappa| >= delta3*eta
  Inequality re_kappa_piecewise; // Re kappa >= 2^{-5/4}|kappa| or 2^{-3/4} R eta/|kappa|
  Inequality re_kappa_vs_eta;    // Re kappa >= delta4*eta
  Inequality product;            // |kappa| Re kappa >= delta6 R eta

  // Normalized by sqrt(omega^2 + xi^2).
  Inequality norm_re_kappa;      // Re kappa' >= delta4 eta'
  Inequality norm_abs_kappa;     // |kappa'| >= 2^{-1/4} eta'
  Inequality norm_product;       // |kappa'| Re kappa' >= delta6 eta'

  bool all_hold(double rel_tol = 1e-12) const;
};

/// Evaluates every lower/upper bound for kappa at p. Requires Re s >= 0.
BoundReport bound_report(const DualPoint& p, double delta);

}  // namespace wavebc
