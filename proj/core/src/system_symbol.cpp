#include "wavebc/system_symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "wavebc/error.hpp"

namespace wavebc {
namespace {

constexpr cdouble kI{0.0, 1.0};

double spectral_norm(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

double smallest_singular_value(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

Eigen::MatrixXd b_matrix(const SystemSpec& sys, std::span<const double> w) {
  if (w.size() != sys.b.size()) {
    throw InvalidArgument("tangential wavenumber count does not match the number of B_j");
  }
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(sys.n(), sys.n());
  for (std::size_t j = 0; j < w.size(); ++j) out += sys.b[j] * (w[j] * w[j]);
  return out;
}

Eigen::MatrixXd a1_inverse_sqrt(const SystemSpec& sys) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sys.a1);
  return es.operatorInverseSqrt();
}

// Eigen-decomposition of H(omega_-', i xi'), eigenvalues in decreasing order.
HSpectrum h_decompose(const SystemSpec& sys, std::span<const double> w, double xi) {
  const Eigen::Index n = sys.n();
  const Eigen::MatrixXd ais = a1_inverse_sqrt(sys);
  Eigen::MatrixXd h = ais * (b_matrix(sys, w) - xi * xi * Eigen::MatrixXd::Identity(n, n)) * ais;
  h = 0.5 * (h + h.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  HSpectrum out;
  out.kappa_sq = es.eigenvalues().reverse();
  out.eigenvectors = es.eigenvectors().rowwise().reverse();
  const Eigen::MatrixXd a_inv = ais * ais;
  out.a_diag = (out.eigenvectors.transpose() * a_inv * out.eigenvectors).diagonal();
  for (Eigen::Index j = 0; j < n; ++j) {
    if (out.kappa_sq(j) > kHZeroTol) ++out.split_index;
    if (std::abs(out.kappa_sq(j)) <= kHZeroTol) out.has_zero = true;
  }
  return out;
}

}  // namespace

bool is_spd(const Eigen::MatrixXd& m) {
  if (m.rows() == 0 || m.rows() != m.cols() || !m.allFinite()) return false;
  const double scale = m.cwiseAbs().maxCoeff();
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) return false;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues()(0);
  const double hi = es.eigenvalues()(m.rows() - 1);
  return hi > 0.0 && lo > 1e-10 * hi;
}

SystemSpec SystemSpec::make(Eigen::MatrixXd a1, std::vector<Eigen::MatrixXd> b) {
  SystemSpec sys;
  const Eigen::Index n = a1.rows();
  sys.a1 = std::move(a1);
  sys.b = std::move(b);
  sys.c0 = Eigen::MatrixXd::Zero(n, n);
  sys.c.assign(sys.b.size(), Eigen::MatrixXd::Zero(n, n));
  sys.c1 = Eigen::MatrixXd::Identity(n, n);
  sys.validate();
  return sys;
}

void SystemSpec::validate() const {
  const Eigen::Index dim = a1.rows();
  if (dim < 1) throw InvalidArgument("SystemSpec: empty A1");
  if (!is_spd(a1)) throw InvalidArgument("SystemSpec: A1 is not symmetric positive definite");
  if (b.empty()) throw InvalidArgument("SystemSpec: at least one tangential direction needed");
  for (const auto& bj : b) {
    if (bj.rows() != dim || bj.cols() != dim) throw InvalidArgument("SystemSpec: B_j shape");
    if (!is_spd(bj)) throw InvalidArgument("SystemSpec: B_j is not symmetric positive definite");
  }
  if (c0.size() != 0 && (c0.rows() != dim || c0.cols() != dim)) {
    throw InvalidArgument("SystemSpec: C0 shape");
  }
  if (!c.empty() && c.size() != b.size()) throw InvalidArgument("SystemSpec: C_j count");
  for (const auto& cj : c) {
    if (cj.rows() != dim || cj.cols() != dim) throw InvalidArgument("SystemSpec: C_j shape");
  }
  if (c1.rows() != dim || c1.cols() != dim ||
      !c1.isApprox(Eigen::MatrixXd::Identity(dim, dim), 1e-14)) {
    throw InvalidArgument("SystemSpec: C1 must be the identity");
  }
}

Eigen::MatrixXd SystemSpec::b_of(std::span<const double> omega_minus) const {
  return b_matrix(*this, omega_minus);
}

FirstOrderSymbol build_first_order_symbol(const SystemSpec& sys, cdouble s,
                                          std::span<const double> omega_minus) {
  if (!(s.real() > 0.0)) throw InvalidArgument("build_first_order_symbol: requires Re s > 0");
  const Eigen::Index n = sys.n();
  double w2 = 0.0;
  for (double w : omega_minus) w2 += w * w;
  const double r = std::sqrt(std::norm(s) + w2);
  const Eigen::MatrixXcd rhs =
      (s * s) * Eigen::MatrixXcd::Identity(n, n) + b_matrix(sys, omega_minus).cast<cdouble>();
  const Eigen::MatrixXcd lower = sys.a1.cast<cdouble>().ldlt().solve(rhs) / r;

  FirstOrderSymbol sym;
  sym.s = s;
  sym.omega_minus.assign(omega_minus.begin(), omega_minus.end());
  sym.m = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  sym.m.topRightCorner(n, n) = r * Eigen::MatrixXcd::Identity(n, n);
  sym.m.bottomLeftCorner(n, n) = lower;
  return sym;
}

EigenSplit eigen_split(const FirstOrderSymbol& sym) {
  if (!(sym.s.real() > 0.0)) throw InvalidArgument("eigen_split: requires Re s > 0");
  const double norm_m = spectral_norm(sym.m);
  EigenSplit out;
  out.schur = ordered_schur(sym.m, [](cdouble k) { return k.real() < 0.0; });
  const Eigen::MatrixXcd& t = out.schur.t;
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    if (std::abs(t(i, i).real()) < 1e-10 * norm_m) {
      throw SplitFailure("eigenvalue of the first-order symbol on the imaginary axis");
    }
    if (t(i, i).real() < 0.0) {
      ++out.n_minus;
    } else {
      ++out.n_plus;
    }
  }
  const Eigen::MatrixXcd rebuilt = out.schur.u * t * out.schur.u.adjoint();
  out.reconstruction_residual = (rebuilt - sym.m).norm() / sym.m.norm();
  return out;
}

double resolvent_norm(const FirstOrderSymbol& sym, double omega1) {
  const Eigen::Index n = sym.m.rows();
  const double smin =
      smallest_singular_value(sym.m - kI * omega1 * Eigen::MatrixXcd::Identity(n, n));
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / smin;
}

double resolvent_product(const SystemSpec& sys, cdouble s, std::span<const double> omega_minus) {
  const FirstOrderSymbol sym = build_first_order_symbol(sys, s, omega_minus);
  const double norm_m = spectral_norm(sym.m);
  const double span = 2.0 * norm_m;
  constexpr int kGrid = 256;
  const double dw = 2.0 * span / kGrid;

  std::vector<double> candidates;
  candidates.reserve(kGrid + 1 + static_cast<std::size_t>(sym.m.rows()));
  for (int i = 0; i <= kGrid; ++i) candidates.push_back(-span + dw * i);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ces(sym.m, false);
  for (Eigen::Index i = 0; i < ces.eigenvalues().size(); ++i) {
    candidates.push_back(ces.eigenvalues()(i).imag());
  }

  std::vector<std::pair<double, double>> scored;
  scored.reserve(candidates.size());
  for (double w : candidates) scored.emplace_back(resolvent_norm(sym, w), w);
  std::sort(scored.begin(), scored.end(), [](const auto& x, const auto& y) {
    return x.first > y.first;
  });

  double best = scored.front().first;
  // Golden-section refinement around the strongest peaks.
  const std::size_t n_refine = std::min<std::size_t>(scored.size(), 2 * sym.m.rows());
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (std::size_t p = 0; p < n_refine; ++p) {
    double lo = scored[p].second - dw;
    double hi = scored[p].second + dw;
    double x1 = hi - g * (hi - lo);
    double x2 = lo + g * (hi - lo);
    double f1 = resolvent_norm(sym, x1);
    double f2 = resolvent_norm(sym, x2);
    for (int it = 0; it < 80 && hi - lo > 1e-14 * (1.0 + std::abs(lo)); ++it) {
      if (f1 > f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - g * (hi - lo);
        f1 = resolvent_norm(sym, x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + g * (hi - lo);
        f2 = resolvent_norm(sym, x2);
      }
    }
    best = std::max({best, f1, f2});
  }
  return best * s.real();
}

HSpectrum h_spectrum(const SystemSpec& sys, std::span<const double> omega_minus_prime,
                     double xi0_prime) {
  double r2 = xi0_prime * xi0_prime;
  for (double w : omega_minus_prime) r2 += w * w;
  if (std::abs(r2 - 1.0) > 1e-10) {
    throw InvalidArgument("h_spectrum: (xi0', omega_-') must lie on the unit sphere");
  }
  return h_decompose(sys, omega_minus_prime, xi0_prime);
}

Eigen::VectorXcd block_reduce(const SystemSpec& sys, std::span<const double> omega_minus_prime,
                              double xi_prime, double eta_prime, double min_gap) {
  if (!(eta_prime >= 0.0) || eta_prime > min_gap) {
    throw InvalidArgument("block_reduce: requires 0 <= eta' <= min_gap");
  }
  const HSpectrum h = h_decompose(sys, omega_minus_prime, xi_prime);
  for (Eigen::Index j = 0; j + 1 < h.kappa_sq.size(); ++j) {
    if (h.kappa_sq(j) - h.kappa_sq(j + 1) < min_gap) {
      throw DegenerateSpectrum("block_reduce: eigenvalues of H closer than the required gap");
    }
  }
  Eigen::VectorXcd out(h.kappa_sq.size());
  for (Eigen::Index j = 0; j < out.size(); ++j) {
    out(j) = cdouble(h.kappa_sq(j), 2.0 * h.a_diag(j) * xi_prime * eta_prime);
  }
  return out;
}

Eigen::VectorXcd resolvent_solution(const SystemSpec& sys, cdouble s,
                                    std::span<const double> omega, const Eigen::VectorXcd& f) {
  if (!(s.real() > 0.0)) throw InvalidArgument("resolvent_solution: requires Re s > 0");
  if (omega.size() != sys.b.size() + 1) {
    throw InvalidArgument("resolvent_solution: omega needs one normal and all tangential entries");
  }
  if (f.size() != sys.n()) throw InvalidArgument("resolvent_solution: right-hand side size");
  const Eigen::MatrixXd p0 = sys.a1 * (omega[0] * omega[0]) + b_matrix(sys, omega.subspan(1));
  const Eigen::MatrixXcd lhs =
      (s * s) * Eigen::MatrixXcd::Identity(sys.n(), sys.n()) + p0.cast<cdouble>();
  return lhs.partialPivLu().solve(f);
}

double resolvent_bound_constant(const SystemSpec& sys) {
  double lambda_min = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(sys.a1, Eigen::EigenvaluesOnly)
                          .eigenvalues()(0);
  for (const auto& bj : sys.b) {
    lambda_min = std::min(
        lambda_min,
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(bj, Eigen::EigenvaluesOnly).eigenvalues()(0));
  }
  return std::max(1.0, 1.0 / std::sqrt(lambda_min));
}

}  // namespace wavebc
