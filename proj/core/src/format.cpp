#include "wavebc/format.hpp"

#include <charconv>

namespace wavebc {

std::string format_number(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_number(std::complex<double> v) {
  std::string out = format_number(v.real());
  if (!(v.imag() < 0.0)) out += '+';
  out += format_number(v.imag());
  out += 'i';
  return out;
}

}  // namespace wavebc
