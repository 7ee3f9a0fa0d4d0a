#include <iostream>
#include <string>
#include <vector>

#include "wavebc/harness.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wavebc::cli::run_cli(args, std::cout, std::cerr);
}
