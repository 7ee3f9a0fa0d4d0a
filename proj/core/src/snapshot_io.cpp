#include "wavebc/snapshot_io.hpp"

#include <ostream>

#include "wavebc/format.hpp"

namespace wavebc {

void write_matrix(std::ostream& out, const std::vector<double>& level, const Grid2D& g) {
  for (int k = 0; k <= g.n - 1; ++k) {
    for (int j = 1; j <= g.n; ++j) {
      if (j > 1) out << ' ';
      out << format_number(level[g.index(j, k)]);
    }
    out << '\n';
  }
}

void write_columnar(std::ostream& out, const std::vector<double>& level, const Grid2D& g) {
  for (int j = 1; j <= g.n; ++j) {
    for (int k = 0; k <= g.n - 1; ++k) {
      out << format_number(g.x(j)) << ' ' << format_number(g.y(k)) << ' ' << format_number(level[g.index(j, k)]) << '\n';
    }
  }
}

void write_monitor_csv(std::ostream& out, const std::vector<MonitorSample>& samples,
                       bool use_error) {
  out << "step,time,value\n";
  for (const MonitorSample& s : samples) {
    out << s.step << ',' << format_number(s.time) << ',' << format_number(use_error ? s.error : s.max_norm)
        << '\n';
  }
}

}  // namespace wavebc
