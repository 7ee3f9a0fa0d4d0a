#pragma once

#include <functional>

#include <Eigen/Dense>

#include "wavebc/branch.hpp"

namespace wavebc {

/// M = U T U^* with T upper triangular and U unitary.
struct OrderedSchur {
  Eigen::MatrixXcd u;
  Eigen::MatrixXcd t;
  /// Number of leading diagonal entries of T that satisfy the selection.
  Eigen::Index leading = 0;
};

/// Exchanges the adjacent diagonal entries t(k,k) and t(k+1,k+1) by a Givens
/// rotation, updating u so that U T U^* is preserved.
void swap_schur_diagonal(Eigen::MatrixXcd& t, Eigen::MatrixXcd& u, Eigen::Index k);

/// Complex Schur form with the selected eigenvalues moved (in their original
/// relative order) to the leading block.
OrderedSchur ordered_schur(const Eigen::MatrixXcd& m,
                           const std::function<bool(cdouble)>& select);

}  // namespace wavebc
