#include <iostream>

#include "wavebc/scalar_bc.hpp"

int main() {
  const auto report = wavebc::classify_scalar(wavebc::ScalarBC::type4(0.5));
  std::cout << wavebc::to_string(report.classification) << '\n';
  return report.classification == wavebc::StabilityClass::Unstable ? 0 : 1;
}
