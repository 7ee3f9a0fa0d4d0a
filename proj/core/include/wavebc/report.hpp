#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wavebc/branch.hpp"

namespace wavebc {

enum class StabilityClass {
  IllPosed,
  StronglyBoundaryStable,
  BoundaryStable,
  Stable,
  Unstable,
  // Coupled pair with b1*b2 = -1: s = 0 is a generalized eigenvalue and the
  // estimate needs boundary data that are second time derivatives.
  Degenerate,
};

enum class WaveKind { Surface, Glancing, Oscillatory };

std::string_view to_string(StabilityClass c);
std::string_view to_string(WaveKind k);

/// Generalized eigenvalue (i xi0', omega0') on the unit circle xi0'^2 + omega0'^2 = 1.
struct GeneralizedEigenvalue {
  double xi0_prime = 0.0;
  double omega0_prime = 0.0;
  cdouble kappa0_prime;
  WaveKind wave_kind = WaveKind::Surface;

  NormalizedDualPoint point() const {
    return NormalizedDualPoint::on_axis(xi0_prime, omega0_prime);
  }
};

WaveKind classify_wave(cdouble kappa0_prime, double zero_tol = 1e-12);

/// Exponents of the sharp estimates for homogeneous initial data and F = 0,
/// written as |u(0)|^2 <= C |g|^2 eta^p (|s|^2+omega^2)^q and similarly for the
/// interior L2 norm.
struct EstimateExponents {
  double boundary_eta = 0.0;
  double boundary_freq = 0.0;
  double interior_eta = 0.0;
  double interior_freq = 0.0;
};

struct StabilityReport {
  StabilityClass classification = StabilityClass::Stable;
  std::vector<GeneralizedEigenvalue> generalized_eigenvalues;
  /// Eigenvalues with Re s > 0 (only for ill-posed problems), normalized.
  std::vector<DualPoint> eigenvalues;
  std::optional<EstimateExponents> estimates;
  std::string notes;
};

/// One analyzed boundary condition, as written to a report document.
struct ReportRecord {
  std::string bc;                       // "type1".."type4", "coupled"
  std::vector<std::pair<std::string, double>> coefficients;
  StabilityReport report;
};

/// Writes records as blank-line separated `key=value` blocks, all numbers with
/// round-trip exact decimal text.
void write_report(std::ostream& out, const std::vector<ReportRecord>& records);
std::string format_report(const std::vector<ReportRecord>& records);

}  // namespace wavebc
