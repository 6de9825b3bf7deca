#pragma once

#include <string>

namespace sharphardy {

// Shortest decimal spelling that parses back to the same double; "inf",
// "-inf" and "nan" for the non-finite values.
std::string fmt_num(double v);

// Inverse of fmt_num. Accepts "inf"/"infinity" in any case. Throws
// ParameterError on anything that is not a complete number.
double parse_num(const std::string& text);

}  // namespace sharphardy
