#include "wavebc/schur_split.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace wavebc {
namespace {

struct Rotation {
  double c = 1.0;
  cdouble s;
};

// Plane rotation with [c s; -conj(s) c] [f; g] = [r; 0].
Rotation make_rotation(cdouble f, cdouble g) {
  if (g == cdouble(0.0)) return {1.0, cdouble(0.0)};
  if (f == cdouble(0.0)) return {0.0, std::conj(g) / std::abs(g)};
  const double af = std::abs(f);
  const double d = std::hypot(af, std::abs(g));
  return {af / d, (f / af) * std::conj(g) / d};
}

}  // namespace

void swap_schur_diagonal(Eigen::MatrixXcd& t, Eigen::MatrixXcd& u, Eigen::Index k) {
  const Eigen::Index n = t.rows();
  const cdouble t11 = t(k, k);
  const cdouble t22 = t(k + 1, k + 1);
  const Rotation r = make_rotation(t(k, k + 1), t22 - t11);
  const double c = r.c;
  const cdouble s = r.s;
  for (Eigen::Index j = k + 2; j < n; ++j) {
    const cdouble a = t(k, j);
    const cdouble b = t(k + 1, j);
    t(k, j) = c * a + s * b;
    t(k + 1, j) = c * b - std::conj(s) * a;
  }
  for (Eigen::Index i = 0; i < k; ++i) {
    const cdouble a = t(i, k);
    const cdouble b = t(i, k + 1);
    t(i, k) = c * a + std::conj(s) * b;
    t(i, k + 1) = c * b - s * a;
  }
  t(k, k) = t22;
  t(k + 1, k + 1) = t11;
  for (Eigen::Index i = 0; i < n; ++i) {
    const cdouble a = u(i, k);
    const cdouble b = u(i, k + 1);
    u(i, k) = c * a + std::conj(s) * b;
    u(i, k + 1) = c * b - s * a;
  }
}

OrderedSchur ordered_schur(const Eigen::MatrixXcd& m,
                           const std::function<bool(cdouble)>& select) {
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(m);
  OrderedSchur out{schur.matrixU(), schur.matrixT(), 0};
  const Eigen::Index n = m.rows();
  // Insertion sort by adjacent swaps: each selected entry bubbles up to the
  // end of the leading block.
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!select(out.t(i, i))) continue;
    for (Eigen::Index k = i; k > out.leading; --k) {
      swap_schur_diagonal(out.t, out.u, k - 1);
    }
    ++out.leading;
  }
  // Clean rounding noise below the diagonal left by the rotations.
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = j + 1; i < n; ++i) out.t(i, j) = 0.0;
  }
  return out;
}

}  // namespace wavebc
