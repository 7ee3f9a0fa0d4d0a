#include "wavebc/branch.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wavebc/error.hpp"

namespace wavebc {

Diverged::Diverged(std::size_t step, double time, double max_norm)
    : Error("simulation diverged at step " + std::to_string(step) + " (t=" +
            std::to_string(time) + ", max norm " + std::to_string(max_norm) + ")"),
      step_(step),
      time_(time),
      max_norm_(max_norm) {}

double DualPoint::scale() const { return std::sqrt(std::norm(s) + omega * omega); }

cdouble branch_sqrt(double a, double b) {
  // Negative reals map to +i sqrt(-a) whatever the sign of the zero.
  if (b == 0.0) {
    return a >= 0.0 ? cdouble(std::sqrt(a), 0.0) : cdouble(0.0, std::sqrt(-a));
  }
  return std::sqrt(cdouble(a, b));
}

Kappa kappa(const DualPoint& p) {
  if (p.s == cdouble(0.0, 0.0) && p.omega == 0.0) {
    throw InvalidArgument("kappa: branch undefined at (s, omega) = (0, 0)");
  }
  const double eta = p.eta();
  const double xi = p.xi();
  const double a = p.omega * p.omega + eta * eta - xi * xi;
  const double b = 2.0 * xi * eta;
  double arg = std::atan2(b, a);
  if (b == 0.0 && a < 0.0) arg = std::numbers::pi;
  return {branch_sqrt(a, b), arg};
}

cdouble kappa(const NormalizedDualPoint& q) {
  const double eta = q.s_prime.real();
  const double xi = q.s_prime.imag();
  return branch_sqrt(q.omega_prime * q.omega_prime + eta * eta - xi * xi, 2.0 * xi * eta);
}

cdouble kappa_from_right(const NormalizedDualPoint& q) {
  const double eta = q.s_prime.real();
  const double xi = q.s_prime.imag();
  if (eta > 0.0) return kappa(q);
  const double a = q.omega_prime * q.omega_prime - xi * xi;
  if (a >= 0.0) return {std::sqrt(a), 0.0};
  return {0.0, std::copysign(std::sqrt(-a), xi)};
}

std::pair<NormalizedDualPoint, double> normalize(const DualPoint& p) {
  const double scale = p.scale();
  if (scale == 0.0) {
    throw InvalidArgument("normalize: (s, omega) = (0, 0) has no normalization");
  }
  return {NormalizedDualPoint{p.s / scale, p.omega / scale}, scale};
}

DualPoint denormalize(const NormalizedDualPoint& q, double scale) {
  return {q.s_prime * scale, q.omega_prime * scale};
}

BoundConstants BoundConstants::make(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw InvalidArgument("BoundConstants: delta must lie in (0, 1)");
  }
  BoundConstants c;
  c.delta = delta;
  c.delta1 = std::pow(2.0, -0.25) * std::sqrt(delta);
  c.delta2 = std::pow(1.0 - delta, 0.25);
  c.delta3 = std::min(c.delta1, c.delta2);
  c.delta4 = std::pow(2.0, -0.75) * std::min(1.0, c.delta3);
  c.delta6 = std::min({c.delta1 * c.delta4, std::pow(2.0, -1.25) * c.delta2 * c.delta2,
                       std::pow(2.0, -0.75)});
  return c;
}

bool BoundReport::all_hold(double rel_tol) const {
  for (const Inequality* q :
       {&modulus_lower, &modulus_upper, &real_part_nonneg_a, &real_part_neg_a, &kappa_piecewise,
        &kappa_vs_eta, &re_kappa_piecewise, &re_kappa_vs_eta, &product, &norm_re_kappa,
        &norm_abs_kappa, &norm_product}) {
    if (!q->holds(rel_tol)) return false;
  }
  return true;
}

BoundReport bound_report(const DualPoint& p, double delta) {
  if (p.eta() < 0.0) throw InvalidArgument("bound_report: requires Re s >= 0");
  const BoundConstants c = BoundConstants::make(delta);
  const Kappa k = kappa(p);

  const double eta = p.eta();
  const double xi = p.xi();
  const double w2 = p.omega * p.omega;
  const double a = w2 + eta * eta - xi * xi;
  const double b = 2.0 * xi * eta;
  const double root_ab = std::sqrt(std::abs(a) + std::abs(b));
  const double big_r = std::sqrt(w2 + std::norm(p.s));

  BoundReport r;
  r.kappa = k.value;
  r.abs_kappa = std::abs(k.value);
  r.re_kappa = k.value.real();

  r.modulus_lower = {r.abs_kappa, std::pow(2.0, -0.25) * root_ab};
  r.modulus_upper = {root_ab, r.abs_kappa};
  r.real_part_nonneg_a = {r.re_kappa, std::pow(2.0, -0.75) * root_ab, a >= 0.0};
  r.real_part_neg_a = {r.re_kappa, root_ab > 0.0 ? 0.5 * std::abs(b) / root_ab : 0.0, a <= 0.0};

  const bool first_case = std::abs(a) >= delta * big_r * big_r;
  r.kappa_piecewise = {r.abs_kappa,
                       first_case ? c.delta1 * big_r : c.delta2 * std::sqrt(big_r * eta)};
  r.kappa_vs_eta = {r.abs_kappa, c.delta3 * eta};
  if (a >= 0.0) {
    r.re_kappa_piecewise = {r.re_kappa, std::pow(2.0, -1.25) * r.abs_kappa};
  } else {
    r.re_kappa_piecewise = {r.re_kappa, std::pow(2.0, -0.75) * big_r * eta / r.abs_kappa};
  }
  r.re_kappa_vs_eta = {r.re_kappa, c.delta4 * eta};
  r.product = {r.abs_kappa * r.re_kappa, c.delta6 * big_r * eta};

  const double tangential = std::sqrt(w2 + xi * xi);
  const bool has_normalization = tangential > 0.0;
  const double eta_n = has_normalization ? eta / tangential : 0.0;
  const double abs_n = has_normalization ? r.abs_kappa / tangential : 0.0;
  const double re_n = has_normalization ? r.re_kappa / tangential : 0.0;
  r.norm_re_kappa = {re_n, c.delta4 * eta_n, has_normalization};
  r.norm_abs_kappa = {abs_n, std::pow(2.0, -0.25) * eta_n, has_normalization};
  r.norm_product = {abs_n * re_n, c.delta6 * eta_n, has_normalization};
  return r;
}

}  // namespace wavebc
