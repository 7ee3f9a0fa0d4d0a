#include "wavebc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "wavebc/error.hpp"
#include "wavebc/format.hpp"

namespace wavebc {
namespace {

ConvergenceRow run_to_ten(const std::string& label, const Grid2D& grid,
                          const BoundaryCoefficient& bc, const ManufacturedSolution& exact,
                          double amplitude) {
  Simulation sim(grid, bc, exact.problem(bc, grid));
  ConvergenceRow row;
  row.label = label;
  row.h = grid.h;
  MonitorOptions mon;
  mon.every = 1.0;
  mon.error = [&exact](const Simulation& s) {
    return max_norm_error(s.fields(), s.grid(), exact, s.time());
  };
  const std::vector<MonitorSample> samples = run(sim, 10.0, mon);
  for (const MonitorSample& s : samples) {
    if (std::abs(s.time - 1.0) < 0.5 * grid.dt) row.err_t1 = s.error;
  }
  row.err_t10 = samples.back().error;
  row.phase_wrapped = row.err_t10 > amplitude;
  return row;
}

}  // namespace

std::string coefficient_label(const BoundaryCoefficient& bc) {
  switch (bc.mode()) {
    case BoundaryCoefficient::Mode::Zero: return "b=0";
    case BoundaryCoefficient::Mode::Real: return "b=" + format_number(bc.value());
    case BoundaryCoefficient::Mode::Imaginary: return "b=i" + format_number(bc.value());
  }
  return "b=?";
}

std::vector<ConvergenceRow> traveling_wave_suite(const BoundaryCoefficient& bc,
                                                 std::span<const double> h_list, double courant) {
  const ManufacturedSolution exact = ManufacturedSolution::traveling_wave();
  std::vector<ConvergenceRow> rows;
  for (double h : h_list) {
    rows.push_back(run_to_ten(coefficient_label(bc), Grid2D::from_h(h, courant), bc, exact,
                              std::numeric_limits<double>::infinity()));
  }
  return rows;
}

std::vector<ConvergenceRow> surface_wave_suite(double beta, double omega0,
                                               std::span<const double> h_list, double courant) {
  const ManufacturedSolution exact = ManufacturedSolution::surface_wave(beta, omega0);
  const BoundaryCoefficient bc = BoundaryCoefficient::imaginary(beta);
  std::vector<ConvergenceRow> rows;
  for (double h : h_list) {
    rows.push_back(run_to_ten("beta=" + format_number(beta), Grid2D::from_h(h, courant), bc, exact, 1.0));
  }
  return rows;
}

double convergence_order(std::span<const ConvergenceRow> rows) {
  if (rows.size() < 2) throw InvalidArgument("convergence_order: need at least two rows");
  double mx = 0.0, my = 0.0;
  for (const auto& r : rows) {
    mx += std::log(r.h);
    my += std::log(r.err_t1);
  }
  mx /= static_cast<double>(rows.size());
  my /= static_cast<double>(rows.size());
  double sxx = 0.0, sxy = 0.0;
  for (const auto& r : rows) {
    sxx += (std::log(r.h) - mx) * (std::log(r.h) - mx);
    sxy += (std::log(r.h) - mx) * (std::log(r.err_t1) - my);
  }
  return sxy / sxx;
}

double TimeSeries::peak() const {
  double m = 0.0;
  for (const auto& s : samples) m = std::max(m, s.max_norm);
  return m;
}

double TimeSeries::value_at(double t) const {
  if (samples.empty()) throw InvalidArgument("TimeSeries::value_at: empty series");
  const auto it = std::min_element(samples.begin(), samples.end(), [t](const auto& a, const auto& b) {
    return std::abs(a.time - t) < std::abs(b.time - t);
  });
  return it->max_norm;
}

std::vector<TimeSeries> growth_study(double b, std::span<const double> h_list, double t_end,
                                     double courant, double every) {
  if (!(b != 0.0)) throw InvalidArgument("growth_study: b must be nonzero");
  const ManufacturedSolution pulse = ManufacturedSolution::gaussian_pulse();
  const BoundaryCoefficient bc = BoundaryCoefficient::real(b);
  std::vector<TimeSeries> out;
  for (double h : h_list) {
    const Grid2D grid = Grid2D::from_h(h, courant);
    TimeSeries ts;
    ts.h = grid.h;
    Simulation sim(grid, bc, pulse.problem(bc, grid));
    MonitorOptions mon;
    mon.every = every;
    mon.on_sample = [&ts](const Simulation&, const MonitorSample& s) { ts.samples.push_back(s); };
    try {
      run(sim, t_end, mon);
    } catch (const Diverged& d) {
      ts.diverged = MonitorSample{d.step(), d.time(), d.max_norm(), std::nan("")};
    }
    out.push_back(std::move(ts));
  }
  return out;
}

std::vector<TimeSeries> forcing_family_study(std::span<const double> beta_list,
                                             ForcingVariant variant, const Grid2D& grid,
                                             double omega0, double t_end, double every) {
  std::vector<TimeSeries> out;
  for (double beta : beta_list) {
    const BoundaryForcingFamily family(beta, omega0);
    const BoundaryCoefficient bc = BoundaryCoefficient::imaginary(beta);
    ProblemData data;
    data.g0 = [family, variant](double y, double t) { return family(variant, y, t); };
    Simulation sim(grid, bc, std::move(data));
    TimeSeries ts;
    ts.h = grid.h;
    ts.beta = beta;
    MonitorOptions mon;
    mon.every = every;
    ts.samples = run(sim, t_end, mon);
    out.push_back(std::move(ts));
  }
  return out;
}

void write_convergence_csv(std::ostream& out, std::span<const ConvergenceRow> rows) {
  out << "case,h,err_t1,err_t10\n";
  for (const auto& r : rows) {
    out << r.label << ',' << format_number(r.h) << ',' << format_number(r.err_t1) << ',' << format_number(r.err_t10)
        << '\n';
  }
}

void write_growth_csv(std::ostream& out, std::span<const TimeSeries> series) {
  out << "h,step,time,value\n";
  for (const auto& ts : series) {
    for (const auto& s : ts.samples) {
      out << format_number(ts.h) << ',' << s.step << ',' << format_number(s.time) << ',' << format_number(s.max_norm)
          << '\n';
    }
  }
}

void write_forcing_csv(std::ostream& out, std::span<const TimeSeries> series,
                       ForcingVariant variant) {
  out << "beta,variant,time,maxnorm\n";
  for (const auto& ts : series) {
    for (const auto& s : ts.samples) {
      out << format_number(ts.beta) << ',' << to_string(variant) << ',' << format_number(s.time) << ','
          << format_number(s.max_norm) << '\n';
    }
  }
}

}  // namespace wavebc
