#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wavebc/fd_solver.hpp"
#include "wavebc/manufactured.hpp"

namespace wavebc {

struct ConvergenceRow {
  std::string label;
  double h = 0.0;
  double err_t1 = 0.0;
  double err_t10 = 0.0;
  /// The t = 10 error exceeds the amplitude of the exact solution.
  bool phase_wrapped = false;
};

/// "b=0", "b=0.5", "b=i0.5", ...
std::string coefficient_label(const BoundaryCoefficient& bc);

/// Traveling-wave runs to t = 10 for each h, errors at t = 1 and t = 10.
std::vector<ConvergenceRow> traveling_wave_suite(const BoundaryCoefficient& bc,
                                                 std::span<const double> h_list,
                                                 double courant = 0.5);

/// Surface-wave runs (b = i beta, zero forcing) to t = 10 for each h.
std::vector<ConvergenceRow> surface_wave_suite(double beta, double omega0,
                                               std::span<const double> h_list,
                                               double courant = 0.5);

/// Least-squares slope of log(err_t1) against log(h).
double convergence_order(std::span<const ConvergenceRow> rows);

struct TimeSeries {
  double h = 0.0;
  double beta = 0.0;
  std::vector<MonitorSample> samples;
  /// Set when the run stopped on the divergence guard.
  std::optional<MonitorSample> diverged;

  double peak() const;
  /// Max norm of the sample closest to time t.
  double value_at(double t) const;
};

/// Gaussian pulse with homogeneous data and real b, max norm sampled every
/// `every` time units.
std::vector<TimeSeries> growth_study(double b, std::span<const double> h_list, double t_end,
                                     double courant = 0.5, double every = 0.25);

/// Zero initial data, F = 0, g1 = 0 and g0 from the boundary forcing family
/// with b = i beta.
std::vector<TimeSeries> forcing_family_study(std::span<const double> beta_list,
                                             ForcingVariant variant, const Grid2D& grid,
                                             double omega0, double t_end = 4.0,
                                             double every = 0.01);

void write_convergence_csv(std::ostream& out, std::span<const ConvergenceRow> rows);
void write_growth_csv(std::ostream& out, std::span<const TimeSeries> series);
void write_forcing_csv(std::ostream& out, std::span<const TimeSeries> series,
                       ForcingVariant variant);

}  // namespace wavebc
