#pragma once

#include <span>

#include "wavebc/branch.hpp"
#include "wavebc/fd_solver.hpp"

namespace wavebc {

enum class ManufacturedKind { TravelingWave, SurfaceWave, GaussianPulse };

/// Closed-form solutions used to drive and verify the solver.
///   TravelingWave: u = sin(2 pi (x-t)) sin(2 pi y) + i cos(2 pi (x-t)) cos(2 pi y),
///     forced with F = 4 pi^2 u and boundary data read off u.
///   SurfaceWave: u = exp(-|beta omega0| x) exp(i omega0 (y - sqrt(1-beta^2) t)),
///     an exact solution of the homogeneous problem with b = i beta at x = 0.
///   GaussianPulse: f1 = f2' = exp(-((x-0.5)^2 + (y-0.5)^2) / L^2), no forcing;
///     u() returns the initial profile for every t.
class ManufacturedSolution {
 public:
  static ManufacturedSolution traveling_wave();
  /// Requires beta omega0 > 0 and |beta| < 1.
  static ManufacturedSolution surface_wave(double beta, double omega0);
  static ManufacturedSolution gaussian_pulse(double width = 0.03);

  ManufacturedKind kind() const { return kind_; }
  double beta() const { return beta_; }
  double omega0() const { return omega0_; }
  double width() const { return width_; }

  cdouble u(double x, double y, double t) const;
  cdouble u_t(double x, double y, double t) const;
  cdouble u_tt(double x, double y, double t) const;
  cdouble u_x(double x, double y, double t) const;
  cdouble u_y(double x, double y, double t) const;
  cdouble u_xx(double x, double y, double t) const;
  cdouble u_yy(double x, double y, double t) const;

  /// Interior forcing u_tt - u_xx - u_yy.
  cdouble forcing(double x, double y, double t) const;
  /// u_x - b u_y at x = 0 for the complex coefficient b.
  cdouble g0(double y, double t, cdouble b) const;
  /// u_x at x = 1.
  cdouble g1(double y, double t) const;

  /// Problem data reproducing this solution with the given closure coefficient.
  /// The surface wave uses zero boundary data at both ends, which is exact only
  /// at x = 0 (|u| = exp(-|beta omega0|) at x = 1).
  ProblemData problem(const BoundaryCoefficient& bc, const Grid2D& grid) const;

 private:
  ManufacturedSolution(ManufacturedKind k, double beta, double omega0, double width)
      : kind_(k), beta_(beta), omega0_(omega0), width_(width) {}

  ManufacturedKind kind_;
  double beta_;
  double omega0_;
  double width_;
};

/// Complex value of b for a closure coefficient.
cdouble complex_coefficient(const BoundaryCoefficient& bc);

/// Max over physical nodes (j = 1..N, k = 0..N-1) of |v - u(t)|. A single
/// component is compared with Re u, two components with (Re u, Im u).
double max_norm_error(const FieldPair& fields, const Grid2D& grid,
                      const ManufacturedSolution& exact, double t);

enum class ForcingVariant { G, Gt, Gtt };

std::string_view to_string(ForcingVariant v);

/// Boundary forcing G(y,t) = u_s(0,y,t) exp(-(t/t0 - 7)^2) and its first two
/// time derivatives, all evaluated in closed form.
class BoundaryForcingFamily {
 public:
  BoundaryForcingFamily(double beta, double omega0, double t0 = 0.2);

  double pulse(double t) const;
  cdouble operator()(ForcingVariant v, double y, double t) const;

  double beta() const { return beta_; }
  double omega0() const { return omega0_; }
  double t0() const { return t0_; }

 private:
  double beta_;
  double omega0_;
  double t0_;
};

}  // namespace wavebc
