#pragma once

#include <complex>
#include <vector>

#include "wavebc/branch.hpp"

namespace wavebc {

/// Loss: e^{2 lambda} = -lambda^2 (derivatives lost per reflection).
/// Gain: e^{2 lambda} = -1 / lambda^2.
enum class ReflectionCase { Loss, Gain };

using cldouble = std::complex<long double>;

struct ReflectionRoot {
  int n = 0;
  cdouble lambda;
  /// Root in extended precision. At n ~ 100 the equation has |derivative| ~ 1e5,
  /// so a residual below 1e-10 is only attainable with more than 53 bits.
  cldouble lambda_ext;
  /// |e^{2 lambda} + lambda^2| (Loss) or |e^{2 lambda} + lambda^{-2}| (Gain),
  /// evaluated at lambda_ext in extended precision.
  double residual = 0.0;
  int iterations = 0;
};

cldouble reflection_residual(ReflectionCase c, cldouble lambda);

/// Roots n = 1..n_max by Newton from i pi n + log(pi n) (Loss) or
/// i pi n - log(pi n) (Gain). Throws NoConvergence after 100 steps.
std::vector<ReflectionRoot> reflection_roots(ReflectionCase c, int n_max);

}  // namespace wavebc
