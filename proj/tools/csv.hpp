#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cjones::cli {

/// Rectangular table of already-rendered cells.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Header row then data rows, comma separated, '\n' line endings.
/// Throws std::invalid_argument for ragged rows and std::runtime_error
/// when the sink fails.
void write_csv(const CsvTable& t, std::ostream& sink);

/// Decimal rendering used for every number the tool prints: 12 digits after
/// the point with trailing zeros trimmed ("27", "0.5", "2.029883212819"),
/// switching to 12-digit scientific notation at magnitude 1e15 and above.
std::string format_number(double x);

/// "<re>+<im>i" / "<re>-<im>i" with both parts rendered by format_number.
std::string format_complex(double re, double im);

}  // namespace cjones::cli
