#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "wavebc/branch.hpp"

namespace wavebc {

/// Grid on the strip [0,1] x [0,1) with periodic y.
/// x_j = (j-1) h for j = 0..N+1 (j = 0 and N+1 are ghost columns),
/// y_k = k h for k = 0..N, where rows k = 0 and k = N duplicate k = N-1 and k = 1.
struct Grid2D {
  int n = 0;
  double h = 0.0;
  double dt = 0.0;

  static constexpr double kMaxCourant = 0.99 / 1.4142135623730951;

  /// N = 1/h + 1 rounded to the nearest integer, dt = courant * h.
  static Grid2D from_h(double h, double courant = 0.5);
  static Grid2D from_n(int n, double courant = 0.5);

  double x(int j) const { return (j - 1) * h; }
  double y(int k) const { return k * h; }
  int columns() const { return n + 2; }
  int rows() const { return n + 1; }
  std::size_t size() const {
    return static_cast<std::size_t>(columns()) * static_cast<std::size_t>(rows());
  }
  std::size_t index(int j, int k) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(n + 1) +
           static_cast<std::size_t>(k);
  }
  double courant() const { return dt / h; }
};

/// Coefficient b in the x = 0 condition u_x - b u_y = g0.
class BoundaryCoefficient {
 public:
  enum class Mode { Zero, Real, Imaginary };

  static BoundaryCoefficient zero() { return {Mode::Zero, 0.0}; }
  static BoundaryCoefficient real(double b);
  /// b = i beta; the solution is advanced as two real components.
  static BoundaryCoefficient imaginary(double beta);

  Mode mode() const { return mode_; }
  double value() const { return value_; }
  int components() const { return mode_ == Mode::Imaginary ? 2 : 1; }

 private:
  BoundaryCoefficient(Mode m, double v) : mode_(m), value_(v) {}
  Mode mode_;
  double value_;
};

/// Pointwise initial data.
using FieldFn = std::function<cdouble(double x, double y)>;
/// Boundary data g(y, t).
using BoundaryFn = std::function<cdouble(double y, double t)>;
/// Fills the interior forcing at time t on the whole grid (layout of Grid2D::index).
/// `im` is empty for single-component runs.
using ForcingFn =
    std::function<void(double t, const Grid2D& grid, std::span<double> re, std::span<double> im)>;

/// Data of the discrete problem. Empty callables mean zero. For real b only the
/// real parts are used; for imaginary b the real and imaginary parts drive the
/// two components.
struct ProblemData {
  ForcingFn forcing;
  BoundaryFn g0;
  BoundaryFn g1;
  FieldFn f1;
  /// Value at t = -dt.
  FieldFn f2_prev;
};

/// Two time levels per solution component.
struct FieldPair {
  int components = 1;
  std::array<std::vector<double>, 2> current;
  std::array<std::vector<double>, 2> previous;
};

/// Samples f1 and f2_prev and fills ghosts and periodic rows at t = 0 and t = -dt.
FieldPair initialize(const Grid2D& grid, const BoundaryCoefficient& bc, const ProblemData& data);

/// Sets ghost columns of `level` (one array per component) from the centered
/// boundary conditions at time t, then the periodic rows of the ghost columns.
void apply_boundary_closure(std::array<std::vector<double>, 2>& level, int components,
                            const Grid2D& grid, const BoundaryCoefficient& bc,
                            const BoundaryFn& g0, const BoundaryFn& g1, double t);

/// Max |v| over physical nodes j = 1..N, k = 0..N-1 and all components.
double max_norm(const FieldPair& fields, const Grid2D& grid);

/// Leapfrog energy with trapezoidal weights in x; constant for b = 0, F = g = 0.
double discrete_energy(const FieldPair& fields, const Grid2D& grid);

/// Divergence guard on the max norm.
inline constexpr double kDivergenceLimit = 1e12;

class Simulation {
 public:
  Simulation(const Grid2D& grid, const BoundaryCoefficient& bc, ProblemData data);

  const Grid2D& grid() const { return grid_; }
  const BoundaryCoefficient& bc() const { return bc_; }
  const FieldPair& fields() const { return fields_; }
  std::size_t step_index() const { return step_; }
  double time() const { return static_cast<double>(step_) * grid_.dt; }

  /// Advances one level and returns the new max norm. Does not check divergence.
  double step();

  double max_norm() const { return wavebc::max_norm(fields_, grid_); }
  double energy() const { return discrete_energy(fields_, grid_); }

 private:
  Grid2D grid_;
  BoundaryCoefficient bc_;
  ProblemData data_;
  FieldPair fields_;
  std::array<std::vector<double>, 2> forcing_;
  std::size_t step_ = 0;
};

struct MonitorSample {
  std::size_t step = 0;
  double time = 0.0;
  double max_norm = 0.0;
  /// Value of MonitorOptions::error, NaN when none was requested.
  double error = 0.0;
};

struct MonitorOptions {
  /// Sampling interval in time units; 0 samples only the first and last level.
  double every = 0.0;
  std::function<double(const Simulation&)> error;
  /// Called after each sample is recorded.
  std::function<void(const Simulation&, const MonitorSample&)> on_sample;
};

/// ceil(t_end / dt) steps (a tolerance of 1e-9 steps absorbs rounding).
std::size_t steps_for(double t_end, const Grid2D& grid);

/// Runs until t_end and returns the samples in time order. Throws Diverged when
/// the max norm exceeds kDivergenceLimit or becomes NaN.
std::vector<MonitorSample> run(Simulation& sim, double t_end, const MonitorOptions& monitors);

}  // namespace wavebc
