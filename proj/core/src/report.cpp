#include "wavebc/report.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "wavebc/format.hpp"

namespace wavebc {

std::string_view to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::IllPosed: return "IllPosed";
    case StabilityClass::StronglyBoundaryStable: return "StronglyBoundaryStable";
    case StabilityClass::BoundaryStable: return "BoundaryStable";
    case StabilityClass::Stable: return "Stable";
    case StabilityClass::Unstable: return "Unstable";
    case StabilityClass::Degenerate: return "Degenerate";
  }
  return "?";
}

std::string_view to_string(WaveKind k) {
  switch (k) {
    case WaveKind::Surface: return "Surface";
    case WaveKind::Glancing: return "Glancing";
    case WaveKind::Oscillatory: return "Oscillatory";
  }
  return "?";
}

WaveKind classify_wave(cdouble kappa0_prime, double zero_tol) {
  if (std::abs(kappa0_prime) <= zero_tol) return WaveKind::Glancing;
  if (kappa0_prime.real() > zero_tol) return WaveKind::Surface;
  return WaveKind::Oscillatory;
}

void write_report(std::ostream& out, const std::vector<ReportRecord>& records) {
  out << "# wavebc stability report\n";
  for (const ReportRecord& rec : records) {
    const StabilityReport& r = rec.report;
    out << "\n[record]\n";
    out << "bc=" << rec.bc << '\n';
    for (const auto& [key, value] : rec.coefficients) {
      out << key << '=' << format_number(value) << '\n';
    }
    out << "classification=" << to_string(r.classification) << '\n';
    if (r.estimates) {
      const EstimateExponents& e = *r.estimates;
      out << "boundary_estimate=eta^" << format_number(e.boundary_eta) << " freq^"
          << format_number(e.boundary_freq) << '\n';
      out << "interior_estimate=eta^" << format_number(e.interior_eta) << " freq^"
          << format_number(e.interior_freq) << '\n';
    }
    out << "eigenvalue_count=" << r.eigenvalues.size() << '\n';
    for (const DualPoint& p : r.eigenvalues) {
      out << "eigenvalue=s:" << format_number(p.s) << ",omega:" << format_number(p.omega) << '\n';
    }
    out << "generalized_eigenvalue_count=" << r.generalized_eigenvalues.size() << '\n';
    for (const GeneralizedEigenvalue& g : r.generalized_eigenvalues) {
      out << "generalized_eigenvalue=xi0:" << format_number(g.xi0_prime)
          << ",omega0:" << format_number(g.omega0_prime) << ",kappa0:" << format_number(g.kappa0_prime)
          << ",kind:" << to_string(g.wave_kind) << '\n';
    }
    if (!r.notes.empty()) out << "notes=" << r.notes << '\n';
  }
}

std::string format_report(const std::vector<ReportRecord>& records) {
  std::ostringstream os;
  write_report(os, records);
  return os.str();
}

}  // namespace wavebc
