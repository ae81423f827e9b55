#include "csv.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cjones::cli {

void write_csv(const CsvTable& t, std::ostream& sink) {
  const auto width = t.header.size();
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (t.rows[r].size() != width) {
      throw std::invalid_argument("write_csv: row " + std::to_string(r) + " has " +
                                  std::to_string(t.rows[r].size()) + " cells, header has " +
                                  std::to_string(width));
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) sink << ',';
      sink << cells[c];
    }
    sink << '\n';
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
  sink.flush();
  if (!sink) throw std::runtime_error("write_csv: write to sink failed");
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  if (std::abs(x) >= 1e15) {
    std::snprintf(buf, sizeof buf, "%.12e", x);
    return buf;
  }
  std::snprintf(buf, sizeof buf, "%.12f", x);
  std::string s(buf);
  const auto last = s.find_last_not_of('0');
  s.erase(last + 1);
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

std::string format_complex(double re, double im) {
  std::string imag = format_number(im);
  if (imag.front() != '-') imag.insert(imag.begin(), '+');
  return format_number(re) + imag + "i";
}

}  // namespace cjones::cli
