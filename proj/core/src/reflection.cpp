#include "wavebc/reflection.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wavebc/error.hpp"

namespace wavebc {

cldouble reflection_residual(ReflectionCase c, cldouble lambda) {
  const cldouble e = std::exp(2.0L * lambda);
  if (c == ReflectionCase::Loss) return e + lambda * lambda;
  return e + 1.0L / (lambda * lambda);
}

std::vector<ReflectionRoot> reflection_roots(ReflectionCase c, int n_max) {
  if (n_max < 1) throw InvalidArgument("reflection_roots: n_max must be at least 1");
  constexpr long double pi = std::numbers::pi_v<long double>;
  std::vector<ReflectionRoot> out;
  out.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    const long double pn = pi * static_cast<long double>(n);
    const long double shift = c == ReflectionCase::Loss ? std::log(pn) : -std::log(pn);
    cldouble lam(shift, pn);
    // Newton on f = e^{2l} + l^2 (Loss) or l^2 e^{2l} + 1 (Gain); same roots.
    int it = 0;
    bool converged = false;
    for (; it < 100; ++it) {
      const cldouble e = std::exp(2.0L * lam);
      cldouble f, df;
      if (c == ReflectionCase::Loss) {
        f = e + lam * lam;
        df = 2.0L * e + 2.0L * lam;
      } else {
        f = lam * lam * e + 1.0L;
        df = (2.0L * lam + 2.0L * lam * lam) * e;
      }
      const cldouble step = f / df;
      lam -= step;
      if (std::abs(step) <= 1e-17L * std::abs(lam)) {
        converged = true;
        ++it;
        break;
      }
    }
    if (!converged) {
      throw NoConvergence("reflection_roots: Newton did not converge for n = " + std::to_string(n));
    }
    ReflectionRoot r;
    r.n = n;
    r.lambda_ext = lam;
    r.lambda = cdouble(static_cast<double>(lam.real()), static_cast<double>(lam.imag()));
    r.residual = static_cast<double>(std::abs(reflection_residual(c, lam)));
    r.iterations = it;
    out.push_back(r);
  }
  return out;
}

}  // namespace wavebc
