#ifndef QAM_FORMAT_HPP
#define QAM_FORMAT_HPP

#include <cstdio>
#include <string>

namespace qam {

/// printf "%.17g": 17 significant digits, enough to round-trip any double.
inline std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace qam

#endif  // QAM_FORMAT_HPP
