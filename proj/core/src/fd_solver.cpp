#include "wavebc/fd_solver.hpp"

#include <algorithm>
#include <cmath>

#include "wavebc/error.hpp"

namespace wavebc {
namespace {

void fill_periodic_rows(std::vector<double>& v, const Grid2D& g, int j_lo, int j_hi) {
  const int n = g.n;
  for (int j = j_lo; j <= j_hi; ++j) {
    v[g.index(j, 0)] = v[g.index(j, n - 1)];
    v[g.index(j, n)] = v[g.index(j, 1)];
  }
}

void sample(std::array<std::vector<double>, 2>& level, int components, const Grid2D& g,
            const FieldFn& f) {
  for (int c = 0; c < components; ++c) level[static_cast<std::size_t>(c)].assign(g.size(), 0.0);
  if (!f) return;
  for (int j = 1; j <= g.n; ++j) {
    for (int k = 1; k <= g.n - 1; ++k) {
      const cdouble v = f(g.x(j), g.y(k));
      level[0][g.index(j, k)] = v.real();
      if (components == 2) level[1][g.index(j, k)] = v.imag();
    }
  }
  for (int c = 0; c < components; ++c) {
    fill_periodic_rows(level[static_cast<std::size_t>(c)], g, 1, g.n);
  }
}

// Largest |v| over j = 1..N, k = 1..N-1 (row k = 0 duplicates k = N-1).
double level_max(const std::vector<double>& v, const Grid2D& g) {
  double m = 0.0;
  for (int j = 1; j <= g.n; ++j) {
    const double* row = v.data() + g.index(j, 0);
    for (int k = 1; k <= g.n - 1; ++k) m = std::max(m, std::abs(row[k]));
  }
  return m;
}

}  // namespace

Grid2D Grid2D::from_n(int n, double courant) {
  if (n < 8) throw InvalidArgument("Grid2D: N must be at least 8");
  if (!(courant > 0.0) || courant > kMaxCourant) {
    throw InvalidArgument("Grid2D: Courant factor must lie in (0, 0.99/sqrt(2)]");
  }
  Grid2D g;
  g.n = n;
  g.h = 1.0 / (n - 1);
  g.dt = courant * g.h;
  return g;
}

Grid2D Grid2D::from_h(double h, double courant) {
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("Grid2D: h must be positive");
  const double n = std::round(1.0 / h) + 1.0;
  if (n > 1e5) throw InvalidArgument("Grid2D: h too small");
  return from_n(static_cast<int>(n), courant);
}

BoundaryCoefficient BoundaryCoefficient::real(double b) {
  if (!std::isfinite(b)) throw InvalidArgument("BoundaryCoefficient: b must be finite");
  return {Mode::Real, b};
}

BoundaryCoefficient BoundaryCoefficient::imaginary(double beta) {
  if (!std::isfinite(beta)) throw InvalidArgument("BoundaryCoefficient: beta must be finite");
  return {Mode::Imaginary, beta};
}

void apply_boundary_closure(std::array<std::vector<double>, 2>& level, int components,
                            const Grid2D& g, const BoundaryCoefficient& bc, const BoundaryFn& g0,
                            const BoundaryFn& g1, double t) {
  const int n = g.n;
  const double h = g.h;
  const double inv2h = 1.0 / (2.0 * h);
  auto& u = level[0];
  auto& w = level[1];
  for (int k = 1; k <= n - 1; ++k) {
    const cdouble gl = g0 ? g0(g.y(k), t) : cdouble(0.0);
    const cdouble gr = g1 ? g1(g.y(k), t) : cdouble(0.0);
    switch (bc.mode()) {
      case BoundaryCoefficient::Mode::Zero:
        u[g.index(0, k)] = u[g.index(2, k)] - 2.0 * h * gl.real();
        break;
      case BoundaryCoefficient::Mode::Real: {
        const double dy = (u[g.index(1, k + 1)] - u[g.index(1, k - 1)]) * inv2h;
        u[g.index(0, k)] = u[g.index(2, k)] - 2.0 * h * (gl.real() + bc.value() * dy);
        break;
      }
      case BoundaryCoefficient::Mode::Imaginary: {
        const double beta = bc.value();
        const double dy1 = (u[g.index(1, k + 1)] - u[g.index(1, k - 1)]) * inv2h;
        const double dy2 = (w[g.index(1, k + 1)] - w[g.index(1, k - 1)]) * inv2h;
        u[g.index(0, k)] = u[g.index(2, k)] - 2.0 * h * (gl.real() - beta * dy2);
        w[g.index(0, k)] = w[g.index(2, k)] - 2.0 * h * (gl.imag() + beta * dy1);
        break;
      }
    }
    u[g.index(n + 1, k)] = u[g.index(n - 1, k)] + 2.0 * h * gr.real();
    if (components == 2) w[g.index(n + 1, k)] = w[g.index(n - 1, k)] + 2.0 * h * gr.imag();
  }
  for (int c = 0; c < components; ++c) {
    auto& v = level[static_cast<std::size_t>(c)];
    fill_periodic_rows(v, g, 0, 0);
    fill_periodic_rows(v, g, n + 1, n + 1);
  }
}

FieldPair initialize(const Grid2D& grid, const BoundaryCoefficient& bc, const ProblemData& data) {
  FieldPair f;
  f.components = bc.components();
  sample(f.current, f.components, grid, data.f1);
  sample(f.previous, f.components, grid, data.f2_prev);
  apply_boundary_closure(f.current, f.components, grid, bc, data.g0, data.g1, 0.0);
  apply_boundary_closure(f.previous, f.components, grid, bc, data.g0, data.g1, -grid.dt);
  return f;
}

double max_norm(const FieldPair& fields, const Grid2D& grid) {
  double m = 0.0;
  for (int c = 0; c < fields.components; ++c) {
    m = std::max(m, level_max(fields.current[static_cast<std::size_t>(c)], grid));
  }
  return m;
}

double discrete_energy(const FieldPair& fields, const Grid2D& g) {
  const int n = g.n;
  const double h2 = g.h * g.h;
  double e = 0.0;
  for (int c = 0; c < fields.components; ++c) {
    const auto& v = fields.current[static_cast<std::size_t>(c)];
    const auto& w = fields.previous[static_cast<std::size_t>(c)];
    for (int j = 1; j <= n; ++j) {
      const double weight = (j == 1 || j == n) ? 0.5 : 1.0;
      for (int k = 0; k <= n - 2; ++k) {
        const std::size_t i = g.index(j, k);
        const double vt = (v[i] - w[i]) / g.dt;
        const double dyv = (v[i + 1] - v[i]) / g.h;
        const double dyw = (w[i + 1] - w[i]) / g.h;
        e += weight * h2 * (vt * vt + dyv * dyw);
      }
    }
    for (int j = 1; j <= n - 1; ++j) {
      for (int k = 0; k <= n - 2; ++k) {
        const std::size_t i = g.index(j, k);
        const std::size_t ip = g.index(j + 1, k);
        e += h2 * ((v[ip] - v[i]) / g.h) * ((w[ip] - w[i]) / g.h);
      }
    }
  }
  return e;
}

Simulation::Simulation(const Grid2D& grid, const BoundaryCoefficient& bc, ProblemData data)
    : grid_(grid), bc_(bc), data_(std::move(data)) {
  if (grid_.n < 8) throw InvalidArgument("Simulation: N must be at least 8");
  if (!(grid_.courant() > 0.0) || grid_.courant() > Grid2D::kMaxCourant) {
    throw InvalidArgument("Simulation: Courant factor out of range");
  }
  fields_ = initialize(grid_, bc_, data_);
  if (data_.forcing) {
    for (int c = 0; c < fields_.components; ++c) {
      forcing_[static_cast<std::size_t>(c)].assign(grid_.size(), 0.0);
    }
  }
}

double Simulation::step() {
  const Grid2D& g = grid_;
  const int n = g.n;
  const std::size_t ny = static_cast<std::size_t>(n + 1);
  const double lam = (g.dt * g.dt) / (g.h * g.h);
  const double dt2 = g.dt * g.dt;
  const double t = time();
  const bool forced = static_cast<bool>(data_.forcing);
  if (forced) {
    std::span<double> im =
        fields_.components == 2 ? std::span<double>(forcing_[1]) : std::span<double>();
    data_.forcing(t, g, forcing_[0], im);
  }

  double m = 0.0;
  for (int c = 0; c < fields_.components; ++c) {
    const std::size_t ci = static_cast<std::size_t>(c);
    const double* v = fields_.current[ci].data();
    double* w = fields_.previous[ci].data();
    const double* f = forced ? forcing_[ci].data() : nullptr;
    for (int j = 1; j <= n; ++j) {
      const std::size_t row = g.index(j, 0);
      for (std::size_t i = row + 1; i < row + static_cast<std::size_t>(n); ++i) {
        const double lap = v[i + ny] + v[i - ny] + v[i + 1] + v[i - 1] - 4.0 * v[i];
        double next = 2.0 * v[i] - w[i] + lam * lap;
        if (f != nullptr) next += dt2 * f[i];
        w[i] = next;
        m = std::max(m, std::abs(next));
      }
    }
    fill_periodic_rows(fields_.previous[ci], g, 1, n);
    std::swap(fields_.current[ci], fields_.previous[ci]);
  }
  ++step_;
  apply_boundary_closure(fields_.current, fields_.components, g, bc_, data_.g0, data_.g1, time());
  return m;
}

std::size_t steps_for(double t_end, const Grid2D& grid) {
  if (!(t_end >= 0.0)) throw InvalidArgument("t_end must be nonnegative");
  return static_cast<std::size_t>(std::ceil(t_end / grid.dt - 1e-9));
}

std::vector<MonitorSample> run(Simulation& sim, double t_end, const MonitorOptions& monitors) {
  const std::size_t total = sim.step_index() + steps_for(t_end, sim.grid());
  std::vector<MonitorSample> out;
  const double dt = sim.grid().dt;
  const std::size_t start = sim.step_index();
  std::size_t next_mark = 1;

  auto record = [&](double norm) {
    MonitorSample s{sim.step_index(), sim.time(), norm,
                    monitors.error ? monitors.error(sim) : std::nan("")};
    out.push_back(s);
    if (monitors.on_sample) monitors.on_sample(sim, s);
  };
  auto mark_step = [&](std::size_t m) {
    return start + static_cast<std::size_t>(std::llround(static_cast<double>(m) * monitors.every / dt));
  };

  record(sim.max_norm());
  while (sim.step_index() < total) {
    const double norm = sim.step();
    if (!(norm <= kDivergenceLimit)) throw Diverged(sim.step_index(), sim.time(), norm);
    const std::size_t s = sim.step_index();
    bool take = s == total;
    if (monitors.every > 0.0) {
      while (mark_step(next_mark) < s) ++next_mark;
      if (mark_step(next_mark) == s) {
        take = true;
        ++next_mark;
      }
    }
    if (take) record(norm);
  }
  return out;
}

}  // namespace wavebc
