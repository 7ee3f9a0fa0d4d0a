#include "wavebc/manufactured.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "wavebc/error.hpp"

namespace wavebc {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr cdouble kI{0.0, 1.0};

}  // namespace

ManufacturedSolution ManufacturedSolution::traveling_wave() {
  return {ManufacturedKind::TravelingWave, 0.0, 0.0, 0.0};
}

ManufacturedSolution ManufacturedSolution::surface_wave(double beta, double omega0) {
  if (!(beta * omega0 > 0.0) || !(std::abs(beta) < 1.0)) {
    throw InvalidArgument("surface wave needs beta*omega0 > 0 and |beta| < 1");
  }
  return {ManufacturedKind::SurfaceWave, beta, omega0, 0.0};
}

ManufacturedSolution ManufacturedSolution::gaussian_pulse(double width) {
  if (!(width > 0.0)) throw InvalidArgument("gaussian pulse width must be positive");
  return {ManufacturedKind::GaussianPulse, 0.0, 0.0, width};
}

cdouble ManufacturedSolution::u(double x, double y, double t) const {
  switch (kind_) {
    case ManufacturedKind::TravelingWave: {
      const double p = kTwoPi * (x - t);
      const double q = kTwoPi * y;
      return {std::sin(p) * std::sin(q), std::cos(p) * std::cos(q)};
    }
    case ManufacturedKind::SurfaceWave: {
      const double c = std::sqrt(1.0 - beta_ * beta_);
      return std::exp(-std::abs(beta_ * omega0_) * x) *
             std::exp(kI * (omega0_ * (y - c * t)));
    }
    case ManufacturedKind::GaussianPulse: {
      const double l2 = width_ * width_;
      return std::exp(-((x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5)) / l2);
    }
  }
  return {};
}

cdouble ManufacturedSolution::u_t(double x, double y, double t) const {
  switch (kind_) {
    case ManufacturedKind::TravelingWave: {
      const double p = kTwoPi * (x - t);
      const double q = kTwoPi * y;
      return {-kTwoPi * std::cos(p) * std::sin(q), kTwoPi * std::sin(p) * std::cos(q)};
    }
    case ManufacturedKind::SurfaceWave:
      return -kI * omega0_ * std::sqrt(1.0 - beta_ * beta_) * u(x, y, t);
    case ManufacturedKind::GaussianPulse:
      return 0.0;
  }
  return {};
}

cdouble ManufacturedSolution::u_tt(double x, double y, double t) const {
  switch (kind_) {
    case ManufacturedKind::TravelingWave:
      return -kTwoPi * kTwoPi * u(x, y, t);
    case ManufacturedKind::SurfaceWave:
      return -omega0_ * omega0_ * (1.0 - beta_ * beta_) * u(x, y, t);
    case ManufacturedKind::GaussianPulse:
      return 0.0;
  }
  return {};
}

cdouble ManufacturedSolution::u_x(double x, double y, double t) const {
  switch (kind_) {
    case ManufacturedKind::TravelingWave:
      return -u_t(x, y, t);
    case ManufacturedKind::SurfaceWave:
      return -std::abs(beta_ * omega0_) * u(x, y, t);
    case ManufacturedKind::GaussianPulse:
      return -2.0 * (x - 0.5) / (width_ * width_) * u(x, y, t);
  }
  return {};
}

cdouble ManufacturedSolution::u_y(double x, double y, double t) const {
  switch (kind_) {
    case ManufacturedKind::TravelingWave: {
      const double p = kTwoPi * (x - t);
      const double q = kTwoPi * y;
      return {kTwoPi * std::sin(p) * std::cos(q), -kTwoPi * std::cos(p) * std::sin(q)};
    }
    case ManufacturedKind::SurfaceWave:
      return kI * omega0_ * u(x, y, t);
    case ManufacturedKind::GaussianPulse:
      return -2.0 * (y - 0.5) / (width_ * width_) * u(x, y, t);
  }
  return {};
}

cdouble ManufacturedSolution::u_xx(double x, double y, double t) const {
  switch (kind_) {
    case ManufacturedKind::TravelingWave:
      return -kTwoPi * kTwoPi * u(x, y, t);
    case ManufacturedKind::SurfaceWave:
      return beta_ * beta_ * omega0_ * omega0_ * u(x, y, t);
    case ManufacturedKind::GaussianPulse: {
      const double l2 = width_ * width_;
      const double d = x - 0.5;
      return (4.0 * d * d / (l2 * l2) - 2.0 / l2) * u(x, y, t);
    }
  }
  return {};
}

cdouble ManufacturedSolution::u_yy(double x, double y, double t) const {
  switch (kind_) {
    case ManufacturedKind::TravelingWave:
      return -kTwoPi * kTwoPi * u(x, y, t);
    case ManufacturedKind::SurfaceWave:
      return -omega0_ * omega0_ * u(x, y, t);
    case ManufacturedKind::GaussianPulse: {
      const double l2 = width_ * width_;
      const double d = y - 0.5;
      return (4.0 * d * d / (l2 * l2) - 2.0 / l2) * u(x, y, t);
    }
  }
  return {};
}

cdouble ManufacturedSolution::forcing(double x, double y, double t) const {
  if (kind_ == ManufacturedKind::TravelingWave) return kTwoPi * kTwoPi * u(x, y, t);
  if (kind_ == ManufacturedKind::SurfaceWave) return 0.0;
  return u_tt(x, y, t) - u_xx(x, y, t) - u_yy(x, y, t);
}

cdouble ManufacturedSolution::g0(double y, double t, cdouble b) const {
  return u_x(0.0, y, t) - b * u_y(0.0, y, t);
}

cdouble ManufacturedSolution::g1(double y, double t) const { return u_x(1.0, y, t); }

cdouble complex_coefficient(const BoundaryCoefficient& bc) {
  switch (bc.mode()) {
    case BoundaryCoefficient::Mode::Zero: return 0.0;
    case BoundaryCoefficient::Mode::Real: return bc.value();
    case BoundaryCoefficient::Mode::Imaginary: return kI * bc.value();
  }
  return 0.0;
}

ProblemData ManufacturedSolution::problem(const BoundaryCoefficient& bc, const Grid2D& grid) const {
  ProblemData d;
  const ManufacturedSolution self = *this;
  const double dt = grid.dt;
  switch (kind_) {
    case ManufacturedKind::TravelingWave: {
      const cdouble b = complex_coefficient(bc);
      d.f1 = [self](double x, double y) { return self.u(x, y, 0.0); };
      d.f2_prev = [self, dt](double x, double y) { return self.u(x, y, -dt); };
      d.g0 = [self, b](double y, double t) { return self.g0(y, t, b); };
      d.g1 = [self](double y, double t) { return self.g1(y, t); };
      // F = 4 pi^2 u is separable in x - t and y; fill from 1D tables.
      d.forcing = [](double t, const Grid2D& g, std::span<double> re, std::span<double> im) {
        const double c = kTwoPi * kTwoPi;
        std::vector<double> sx(static_cast<std::size_t>(g.columns()));
        std::vector<double> cx(sx.size());
        std::vector<double> sy(static_cast<std::size_t>(g.rows()));
        std::vector<double> cy(sy.size());
        for (int j = 0; j < g.columns(); ++j) {
          const double p = kTwoPi * (g.x(j) - t);
          sx[static_cast<std::size_t>(j)] = std::sin(p);
          cx[static_cast<std::size_t>(j)] = std::cos(p);
        }
        for (int k = 0; k < g.rows(); ++k) {
          const double q = kTwoPi * g.y(k);
          sy[static_cast<std::size_t>(k)] = std::sin(q);
          cy[static_cast<std::size_t>(k)] = std::cos(q);
        }
        for (int j = 0; j < g.columns(); ++j) {
          for (int k = 0; k < g.rows(); ++k) {
            const std::size_t i = g.index(j, k);
            const auto ju = static_cast<std::size_t>(j);
            const auto ku = static_cast<std::size_t>(k);
            re[i] = c * sx[ju] * sy[ku];
            if (!im.empty()) im[i] = c * cx[ju] * cy[ku];
          }
        }
      };
      break;
    }
    case ManufacturedKind::SurfaceWave:
      d.f1 = [self](double x, double y) { return self.u(x, y, 0.0); };
      d.f2_prev = [self, dt](double x, double y) { return self.u(x, y, -dt); };
      break;
    case ManufacturedKind::GaussianPulse:
      d.f1 = [self](double x, double y) { return self.u(x, y, 0.0); };
      d.f2_prev = d.f1;
      break;
  }
  return d;
}

double max_norm_error(const FieldPair& fields, const Grid2D& g, const ManufacturedSolution& exact,
                      double t) {
  double m = 0.0;
  for (int j = 1; j <= g.n; ++j) {
    for (int k = 0; k <= g.n - 1; ++k) {
      const cdouble e = exact.u(g.x(j), g.y(k), t);
      const std::size_t i = g.index(j, k);
      m = std::max(m, std::abs(fields.current[0][i] - e.real()));
      if (fields.components == 2) m = std::max(m, std::abs(fields.current[1][i] - e.imag()));
    }
  }
  return m;
}

std::string_view to_string(ForcingVariant v) {
  switch (v) {
    case ForcingVariant::G: return "G";
    case ForcingVariant::Gt: return "Gt";
    case ForcingVariant::Gtt: return "Gtt";
  }
  return "?";
}

BoundaryForcingFamily::BoundaryForcingFamily(double beta, double omega0, double t0)
    : beta_(beta), omega0_(omega0), t0_(t0) {
  if (!(beta * omega0 > 0.0) || !(std::abs(beta) < 1.0)) {
    throw InvalidArgument("forcing family needs beta*omega0 > 0 and |beta| < 1");
  }
  if (!(t0 > 0.0)) throw InvalidArgument("forcing family needs t0 > 0");
}

double BoundaryForcingFamily::pulse(double t) const {
  const double z = t / t0_ - 7.0;
  return std::exp(-z * z);
}

cdouble BoundaryForcingFamily::operator()(ForcingVariant v, double y, double t) const {
  const double c = std::sqrt(1.0 - beta_ * beta_);
  const cdouble wave = std::exp(kI * (omega0_ * (y - c * t)));
  const double z = t / t0_ - 7.0;
  const double p = std::exp(-z * z);
  const cdouble a = -kI * omega0_ * c;  // d/dt of the wave factor
  switch (v) {
    case ForcingVariant::G:
      return wave * p;
    case ForcingVariant::Gt: {
      const double dp = -2.0 * z / t0_ * p;
      return wave * (a * p + dp);
    }
    case ForcingVariant::Gtt: {
      const double dp = -2.0 * z / t0_ * p;
      const double ddp = (4.0 * z * z - 2.0) / (t0_ * t0_) * p;
      return wave * (a * a * p + 2.0 * a * dp + ddp);
    }
  }
  return {};
}

}  // namespace wavebc
