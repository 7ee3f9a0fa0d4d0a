#pragma once

#include <complex>
#include <string>

namespace wavebc {

/// Shortest decimal text that parses back to exactly v.
std::string format_number(double v);
/// "re+imi" / "re-imi", each part as in format_number(double).
std::string format_number(std::complex<double> v);

}  // namespace wavebc
