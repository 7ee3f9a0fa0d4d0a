#pragma once

#include <span>
#include <string>
#include <vector>

#include "wavebc/branch.hpp"
#include "wavebc/report.hpp"

namespace wavebc {

enum class BcType { Type1, Type2, Type3, Type4 };

std::string_view to_string(BcType t);

/// One of the four scalar boundary conditions at x = 0 for the half-plane
/// wave equation u_tt = u_xx + u_yy:
///   Type1: u_t = a u_x + b u_y + g   (a > 0, |b| < 1)
///   Type2: u_x = i b u_y + g         (b != 0, |b| < 1)
///   Type3: u_x = g
///   Type4: u_x = b u_y + g           (b != 0)
class ScalarBC {
 public:
  static ScalarBC type1(double a, double b);
  static ScalarBC type2(double b);
  static ScalarBC type3();
  static ScalarBC type4(double b);
  /// Type1 with a <= 0. Only meant for demonstrating ill-posedness; the
  /// instance is flagged and classify_scalar() reports IllPosed.
  static ScalarBC type1_wrong_sign(double a, double b);

  BcType kind() const { return kind_; }
  double a() const { return a_; }
  double b() const { return b_; }
  bool flagged_illegal() const { return flagged_; }

  std::string describe() const;

 private:
  ScalarBC(BcType kind, double a, double b, bool flagged)
      : kind_(kind), a_(a), b_(b), flagged_(flagged) {}

  BcType kind_;
  double a_;
  double b_;
  bool flagged_;
};

/// Coefficient multiplying the boundary value of the decaying mode:
///   Type1: s' + a kappa' - i b omega'
///   Type2: kappa' - b omega'
///   Type3: kappa'
///   Type4: kappa' + i b omega'
/// On Re s' = 0 the right-half-plane limit of kappa' is used.
cdouble boundary_symbol(const ScalarBC& bc, const NormalizedDualPoint& q);

/// Same coefficient at an unnormalized point (homogeneous of degree one).
cdouble boundary_symbol(const ScalarBC& bc, const DualPoint& p);

/// Smallest Re s' scanned by eigenvalue_search().
inline constexpr double kSearchEtaFloor = 1e-6;
/// |symbol| below this after polishing counts as a zero.
inline constexpr double kZeroThreshold = 1e-8;

/// Scans {Re s' > 0} x unit circle for zeros of the boundary symbol on a
/// grid_density x 4*grid_density grid (log-spaced towards the imaginary
/// axis), polishing local minima with Newton. Returns normalized zeros
/// (scale 1). Empty for every legal boundary condition.
std::vector<DualPoint> eigenvalue_search(const ScalarBC& bc, int grid_density);

/// Closed-form generalized eigenvalues on the unit circle. Both signs of xi0'
/// are listed; omega0' >= 0 unless the condition itself fixes its sign
/// (Type2 needs b omega0' > 0, Type4 needs xi0' b omega0' < 0).
std::vector<GeneralizedEigenvalue> generalized_eigenvalues(const ScalarBC& bc);

struct SlopeFit {
  double order = 0.0;
  double constant = 0.0;
};

/// Least-squares fit of log|symbol(i xi0' + eta', omega0')| against log eta'.
SlopeFit perturbation_slope(const ScalarBC& bc, const GeneralizedEigenvalue& ge,
                            std::span<const double> eta_samples);

StabilityReport classify_scalar(const ScalarBC& bc);

}  // namespace wavebc
