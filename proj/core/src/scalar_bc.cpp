#include "wavebc/scalar_bc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wavebc/error.hpp"
#include "wavebc/format.hpp"

namespace wavebc {
namespace {

constexpr cdouble kI{0.0, 1.0};

// Symbol and its s-derivative at an unnormalized point with omega held fixed.
struct SymbolValue {
  cdouble value;
  cdouble ds;
};

SymbolValue symbol_and_derivative(const ScalarBC& bc, cdouble s, double omega) {
  const cdouble k = kappa(DualPoint{s, omega}).value;
  // d kappa / ds = s / kappa; undefined at kappa = 0, where Newton is not used.
  const cdouble dk = k == cdouble(0.0) ? cdouble(0.0) : s / k;
  switch (bc.kind()) {
    case BcType::Type1:
      return {s + bc.a() * k - kI * bc.b() * omega, 1.0 + bc.a() * dk};
    case BcType::Type2:
      return {k - bc.b() * omega, dk};
    case BcType::Type3:
      return {k, dk};
    case BcType::Type4:
      return {k + kI * bc.b() * omega, dk};
  }
  return {};
}

struct SpherePoint {
  double eta, xi, omega;
};

double sphere_distance(const SpherePoint& p, const SpherePoint& q) {
  return std::sqrt((p.eta - q.eta) * (p.eta - q.eta) + (p.xi - q.xi) * (p.xi - q.xi) +
                   (p.omega - q.omega) * (p.omega - q.omega));
}

}  // namespace

std::string_view to_string(BcType t) {
  switch (t) {
    case BcType::Type1: return "type1";
    case BcType::Type2: return "type2";
    case BcType::Type3: return "type3";
    case BcType::Type4: return "type4";
  }
  return "?";
}

ScalarBC ScalarBC::type1(double a, double b) {
  if (!(a > 0.0) || !(std::abs(b) < 1.0)) {
    throw InvalidArgument("type1 boundary condition needs a > 0 and |b| < 1");
  }
  return {BcType::Type1, a, b, false};
}

ScalarBC ScalarBC::type2(double b) {
  if (!(b != 0.0 && std::abs(b) < 1.0)) {
    throw InvalidArgument("type2 boundary condition needs b != 0 and |b| < 1");
  }
  return {BcType::Type2, 0.0, b, false};
}

ScalarBC ScalarBC::type3() { return {BcType::Type3, 0.0, 0.0, false}; }

ScalarBC ScalarBC::type4(double b) {
  if (!(b != 0.0) || !std::isfinite(b)) {
    throw InvalidArgument("type4 boundary condition needs a finite b != 0");
  }
  return {BcType::Type4, 0.0, b, false};
}

ScalarBC ScalarBC::type1_wrong_sign(double a, double b) {
  if (!(a <= 0.0) || !std::isfinite(b)) {
    throw InvalidArgument("type1_wrong_sign expects a <= 0");
  }
  return {BcType::Type1, a, b, true};
}

std::string ScalarBC::describe() const {
  std::ostringstream os;
  os << to_string(kind_);
  if (kind_ == BcType::Type1) os << " a=" << format_number(a_);
  if (kind_ != BcType::Type3) os << " b=" << format_number(b_);
  if (flagged_) os << " (flagged: wrong sign of a)";
  return os.str();
}

cdouble boundary_symbol(const ScalarBC& bc, const NormalizedDualPoint& q) {
  if (q.s_prime.real() < 0.0) {
    throw InvalidArgument("boundary_symbol: requires Re s' >= 0");
  }
  const cdouble k = kappa_from_right(q);
  const double w = q.omega_prime;
  switch (bc.kind()) {
    case BcType::Type1: return q.s_prime + bc.a() * k - kI * bc.b() * w;
    case BcType::Type2: return k - bc.b() * w;
    case BcType::Type3: return k;
    case BcType::Type4: return k + kI * bc.b() * w;
  }
  return {};
}

cdouble boundary_symbol(const ScalarBC& bc, const DualPoint& p) {
  const auto [q, scale] = normalize(p);
  return boundary_symbol(bc, q) * scale;
}

std::vector<DualPoint> eigenvalue_search(const ScalarBC& bc, int grid_density) {
  if (grid_density < 16) {
    throw InvalidArgument("eigenvalue_search: grid_density must be at least 16");
  }
  const int n_alpha = grid_density;
  const int n_phi = 4 * grid_density;
  const double log_lo = std::log(kSearchEtaFloor);
  const double log_hi = std::log(std::numbers::pi / 2.0);

  std::vector<SpherePoint> pts(static_cast<std::size_t>(n_alpha * n_phi));
  std::vector<double> mag(pts.size());
  auto at = [n_phi](int i, int j) { return static_cast<std::size_t>(i * n_phi + j); };
  for (int i = 0; i < n_alpha; ++i) {
    // eta' = sin(alpha), alpha log-spaced in [floor, pi/2].
    const double alpha =
        std::exp(log_lo + (log_hi - log_lo) * static_cast<double>(i) / (n_alpha - 1));
    for (int j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / n_phi;
      const SpherePoint p{std::sin(alpha), std::cos(alpha) * std::cos(phi),
                          std::cos(alpha) * std::sin(phi)};
      pts[at(i, j)] = p;
      mag[at(i, j)] =
          std::abs(boundary_symbol(bc, NormalizedDualPoint{cdouble(p.eta, p.xi), p.omega}));
    }
  }

  std::vector<SpherePoint> zeros;
  auto record = [&zeros](const SpherePoint& z) {
    for (const SpherePoint& q : zeros) {
      if (sphere_distance(q, z) < 1e-6) return;
    }
    zeros.push_back(z);
  };

  for (int i = 0; i < n_alpha; ++i) {
    for (int j = 0; j < n_phi; ++j) {
      const double m = mag[at(i, j)];
      bool local_min = true;
      for (int di = -1; di <= 1 && local_min; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const int ii = i + di;
          if (ii < 0 || ii >= n_alpha) continue;
          const int jj = (j + dj + n_phi) % n_phi;
          if (mag[at(ii, jj)] < m) {
            local_min = false;
            break;
          }
        }
      }
      if (!local_min && m >= kZeroThreshold) continue;

      const SpherePoint start = pts[at(i, j)];
      if (m < kZeroThreshold) {
        record(start);
        continue;
      }
      // Newton in s with omega fixed; the symbol is homogeneous so the zero set
      // is a union of rays and any point on the ray will do.
      cdouble s(start.eta, start.xi);
      const double omega = start.omega;
      bool left_domain = false;
      for (int it = 0; it < 60; ++it) {
        const SymbolValue f = symbol_and_derivative(bc, s, omega);
        if (std::abs(f.ds) == 0.0) break;
        const cdouble step = f.value / f.ds;
        s -= step;
        const DualPoint trial{s, omega};
        if (trial.scale() == 0.0) {
          left_domain = true;
          break;
        }
        if (s.real() / trial.scale() < 0.5 * kSearchEtaFloor) {
          left_domain = true;
          break;
        }
        if (std::abs(step) <= 1e-15 * std::abs(s)) break;
      }
      if (left_domain) continue;
      const auto [q, scale] = normalize(DualPoint{s, omega});
      if (q.s_prime.real() < 0.5 * kSearchEtaFloor) continue;
      if (std::abs(boundary_symbol(bc, q)) < kZeroThreshold) {
        record({q.s_prime.real(), q.s_prime.imag(), q.omega_prime});
      }
    }
  }

  std::vector<DualPoint> out;
  out.reserve(zeros.size());
  for (const SpherePoint& z : zeros) out.push_back({cdouble(z.eta, z.xi), z.omega});
  return out;
}

std::vector<GeneralizedEigenvalue> generalized_eigenvalues(const ScalarBC& bc) {
  std::vector<GeneralizedEigenvalue> out;
  const double b = bc.b();
  switch (bc.kind()) {
    case BcType::Type1:
      break;
    case BcType::Type2: {
      // xi0' = +-sqrt(1-b^2) omega0', kappa0' = b omega0' > 0.
      const double w = std::copysign(1.0 / std::sqrt(2.0 - b * b), b);
      const double x = std::sqrt(1.0 - b * b) * std::abs(w);
      for (double sign : {1.0, -1.0}) {
        out.push_back({sign * x, w, cdouble(b * w, 0.0), WaveKind::Surface});
      }
      break;
    }
    case BcType::Type3: {
      const double w = 1.0 / std::sqrt(2.0);
      for (double sign : {1.0, -1.0}) {
        out.push_back({sign * w, w, cdouble(0.0, 0.0), WaveKind::Glancing});
      }
      break;
    }
    case BcType::Type4: {
      // |xi0'| = sqrt(1+b^2)|omega0'|, xi0' b omega0' < 0, kappa0' = -i omega0' b.
      const double w_abs = 1.0 / std::sqrt(2.0 + b * b);
      const double x_abs = std::sqrt(1.0 + b * b) * w_abs;
      for (double sign : {1.0, -1.0}) {
        const double x = sign * x_abs;
        const double w = -std::copysign(w_abs, x * b);
        out.push_back({x, w, cdouble(0.0, -w * b), WaveKind::Oscillatory});
      }
      break;
    }
  }
  return out;
}

SlopeFit perturbation_slope(const ScalarBC& bc, const GeneralizedEigenvalue& ge,
                            std::span<const double> eta_samples) {
  if (eta_samples.empty()) {
    throw InvalidArgument("perturbation_slope: empty eta sample list");
  }
  for (std::size_t i = 0; i < eta_samples.size(); ++i) {
    if (!(eta_samples[i] > 0.0) || eta_samples[i] > 1e-2) {
      throw InvalidArgument("perturbation_slope: samples must lie in (0, 1e-2]");
    }
    if (i > 0 && !(eta_samples[i] < eta_samples[i - 1])) {
      throw InvalidArgument("perturbation_slope: samples must be decreasing");
    }
  }
  const std::size_t n = eta_samples.size();
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    const NormalizedDualPoint q{cdouble(eta_samples[i], ge.xi0_prime), ge.omega0_prime};
    lx[i] = std::log(eta_samples[i]);
    ly[i] = std::log(std::abs(boundary_symbol(bc, q)));
  }
  if (n == 1) return {1.0, std::exp(ly[0] - lx[0])};
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  const double order = sxy / sxx;
  return {order, std::exp(my - order * mx)};
}

StabilityReport classify_scalar(const ScalarBC& bc) {
  StabilityReport r;
  if (bc.flagged_illegal()) {
    r.classification = StabilityClass::IllPosed;
    r.eigenvalues = eigenvalue_search(bc, 32);
    r.notes = "wrong sign of a in u_t = a u_x + b u_y; " +
              std::to_string(r.eigenvalues.size()) + " eigenvalue(s) with Re s > 0 located";
    return r;
  }
  r.generalized_eigenvalues = generalized_eigenvalues(bc);
  switch (bc.kind()) {
    case BcType::Type1:
      r.classification = StabilityClass::StronglyBoundaryStable;
      r.estimates = EstimateExponents{0.0, -1.0, -1.0, -1.0};
      r.notes = "no generalized eigenvalues; one derivative gained at the boundary; Stable";
      break;
    case BcType::Type2:
      r.classification = StabilityClass::Stable;
      r.estimates = EstimateExponents{-2.0, 0.0, -2.0, -0.5};
      r.notes = "Boundary Stable with surface waves; interior estimate holds";
      break;
    case BcType::Type3:
      r.classification = StabilityClass::Stable;
      r.estimates = EstimateExponents{-1.0, -0.5, -1.5, -0.75};
      r.notes = "Boundary Stable with glancing waves; interior estimate holds";
      break;
    case BcType::Type4:
      r.classification = StabilityClass::Unstable;
      r.estimates = EstimateExponents{-2.0, 0.0, -3.0, 0.0};
      r.notes = "oscillatory generalized eigenvalues; one derivative lost per reflection";
      break;
  }
  return r;
}

}  // namespace wavebc
