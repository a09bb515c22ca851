#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace bmw {

// Numeric CSV cells carry 12 significant digits so reruns are byte-identical
// and round-trips recover the value to double precision.
inline std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string csv_number(long v) { return std::to_string(v); }
inline std::string csv_number(int v) { return std::to_string(v); }

// Rows always end in a bare LF, independent of platform.
inline void csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << cells[i];
  }
  out << '\n';
}

} // namespace bmw
