#pragma once

#include <utility>

#include "wavebc/branch.hpp"
#include "wavebc/report.hpp"

namespace wavebc {

/// Coupled pair u1_x + b1 u2_y = g1, u2_x + b2 u1_y = g2 for two wave equations.
struct CoupledBC {
  double b1 = 0.0;
  double b2 = 0.0;

  double product() const { return b1 * b2; }
};

/// Products within this distance of -1 or 0 are treated as the boundary cases.
inline constexpr double kCoupledProductTol = 1e-12;

/// kappa^2 + omega^2 b1 b2 = s^2 + omega^2 (1 + b1 b2). Requires Re s >= 0.
cdouble coupled_determinant(const CoupledBC& cb, const DualPoint& p);

StabilityReport classify_coupled(const CoupledBC& cb);

/// Boundary values (u10, u20) of the decaying solution for boundary data
/// (g1hat, g2hat). Throws SingularBoundarySystem when
/// |det| <= 1e-13 (|s|^2 + omega^2).
std::pair<cdouble, cdouble> coupled_boundary_solution(const CoupledBC& cb, cdouble g1hat,
                                                      cdouble g2hat, const DualPoint& p);

}  // namespace wavebc
