#pragma once

#include <iosfwd>
#include <vector>

#include "wavebc/fd_solver.hpp"

namespace wavebc {

/// Physical nodes as a matrix: one line per y_k (k = 0..N-1), one column per x_j
/// (j = 1..N), space separated.
void write_matrix(std::ostream& out, const std::vector<double>& level, const Grid2D& grid);

/// One `x y value` line per physical node, x varying slowest.
void write_columnar(std::ostream& out, const std::vector<double>& level, const Grid2D& grid);

/// CSV with header `step,time,value`; value is the max norm, or the monitored
/// error when `use_error` is set.
void write_monitor_csv(std::ostream& out, const std::vector<MonitorSample>& samples,
                       bool use_error = false);

}  // namespace wavebc
