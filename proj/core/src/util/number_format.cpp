#include "hybridlang/util/number_format.hpp"

#include <cstdio>
#include <cstdlib>

namespace hybridlang::util {

std::string format_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string format_double(double v) {
  for (int digits = 15; digits <= 17; ++digits) {
    std::string s = format_double(v, digits);
    if (std::strtod(s.c_str(), nullptr) == v) return s;
  }
  return format_double(v, 17);
}

}  // namespace hybridlang::util
