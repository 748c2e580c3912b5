#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "monocert/grid.hpp"

namespace monocert::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kCheckFailed = 2,
  kIndeterminate = 3,
};

/// Runs one command line (argv[0] is the program name). Reports go to the
/// files named by --json/--csv; the verdict line goes to `out`, diagnostics
/// to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

/// "xmin:xmax:ymin:ymax"; each bound is a number or pi / -pi.
Region parse_region(const std::string& text);
/// "NXxNY", e.g. "129x129".
GridSpec parse_grid(const std::string& text);
/// "x,y"; each coordinate is a number or pi / -pi.
Vec2 parse_point(const std::string& text);
/// "lo:hi".
std::pair<double, double> parse_interval(const std::string& text);

}  // namespace monocert::cli
