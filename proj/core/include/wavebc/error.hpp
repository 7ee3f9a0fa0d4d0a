#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wavebc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (bad coefficients, origin of the dual plane, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The 2x2 coupled boundary system is singular at the requested point.
class SingularBoundarySystem : public Error {
 public:
  using Error::Error;
};

/// An eigenvalue of the first-order symbol sits on the imaginary axis.
class SplitFailure : public Error {
 public:
  using Error::Error;
};

/// Eigenvalues of H are not separated by the requested gap.
class DegenerateSpectrum : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// A simulation exceeded the divergence guard.
class Diverged : public Error {
 public:
  Diverged(std::size_t step, double time, double max_norm);

  std::size_t step() const noexcept { return step_; }
  double time() const noexcept { return time_; }
  double max_norm() const noexcept { return max_norm_; }

 private:
  std::size_t step_;
  double time_;
  double max_norm_;
};

}  // namespace wavebc
