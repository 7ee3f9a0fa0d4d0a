#include "wavebc/coupled_bc.hpp"

#include <cmath>

#include "wavebc/error.hpp"

namespace wavebc {
namespace {

constexpr cdouble kI{0.0, 1.0};

void add_pair(StabilityReport& r, double xi_abs, double omega, cdouble k_pos, WaveKind kind) {
  // k_pos is kappa0' for xi0' > 0; the mirrored point carries conj(k_pos).
  r.generalized_eigenvalues.push_back({xi_abs, omega, k_pos, kind});
  r.generalized_eigenvalues.push_back({-xi_abs, omega, std::conj(k_pos), kind});
}

}  // namespace

cdouble coupled_determinant(const CoupledBC& cb, const DualPoint& p) {
  if (p.eta() < 0.0) throw InvalidArgument("coupled_determinant: requires Re s >= 0");
  return p.s * p.s + p.omega * p.omega * (1.0 + cb.product());
}

StabilityReport classify_coupled(const CoupledBC& cb) {
  StabilityReport r;
  const double p = cb.product();
  if (!std::isfinite(p)) throw InvalidArgument("classify_coupled: non-finite coefficients");

  if (p < -1.0 - kCoupledProductTol) {
    r.classification = StabilityClass::IllPosed;
    // s = sqrt(-(1+p)) |omega|, normalized with omega' > 0.
    const double w = 1.0 / std::sqrt(-p);
    r.eigenvalues.push_back({cdouble(std::sqrt(-(1.0 + p)) * w, 0.0), w});
    r.notes = "real eigenvalue s = sqrt(-(1+b1 b2)) |omega| > 0";
    return r;
  }
  if (std::abs(p + 1.0) <= kCoupledProductTol) {
    r.classification = StabilityClass::Degenerate;
    r.generalized_eigenvalues.push_back({0.0, 1.0, cdouble(1.0, 0.0), WaveKind::Surface});
    r.notes =
        "s = 0 is a generalized eigenvalue; an estimate needs boundary data of the form "
        "g = d^2/dt^2 of a smooth function";
    return r;
  }
  const double w = 1.0 / std::sqrt(2.0 + p);
  if (p < -kCoupledProductTol) {
    r.classification = StabilityClass::Stable;
    add_pair(r, std::sqrt(1.0 + p) * w, w, cdouble(std::sqrt(-p) * w, 0.0), WaveKind::Surface);
    r.estimates = EstimateExponents{-2.0, 0.0, -2.0, -0.5};
    r.notes = "Boundary Stable with surface waves; interior estimate holds";
  } else if (p <= kCoupledProductTol) {
    r.classification = StabilityClass::Stable;
    add_pair(r, w, w, cdouble(0.0, 0.0), WaveKind::Glancing);
    r.estimates = EstimateExponents{-1.0, -0.5, -1.5, -0.75};
    r.notes = "Boundary Stable with glancing waves; interior estimate holds";
  } else {
    r.classification = StabilityClass::Unstable;
    add_pair(r, std::sqrt(1.0 + p) * w, w, kI * std::sqrt(p) * w, WaveKind::Oscillatory);
    r.estimates = EstimateExponents{-2.0, 0.0, -3.0, 0.0};
    r.notes = "oscillatory generalized eigenvalues; one derivative lost per reflection";
  }
  return r;
}

std::pair<cdouble, cdouble> coupled_boundary_solution(const CoupledBC& cb, cdouble g1hat,
                                                      cdouble g2hat, const DualPoint& p) {
  const cdouble det = coupled_determinant(cb, p);
  const double scale2 = std::norm(p.s) + p.omega * p.omega;
  if (!(std::abs(det) > 1e-13 * scale2)) {
    throw SingularBoundarySystem("coupled boundary system is singular at the requested point");
  }
  const cdouble k = kappa(p).value;
  const cdouble u10 = -(k * g1hat + kI * p.omega * cb.b1 * g2hat) / det;
  const cdouble u20 = -(k * g2hat + kI * p.omega * cb.b2 * g1hat) / det;
  return {u10, u20};
}

}  // namespace wavebc
