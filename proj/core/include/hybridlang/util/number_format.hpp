#pragma once

#include <string>

namespace hybridlang::util {

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);

// Fixed significant-digit form (%.{digits}g); 17 digits round-trips any double.
std::string format_double(double v, int digits);

}  // namespace hybridlang::util
