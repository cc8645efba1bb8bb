#pragma once

#include <charconv>
#include <string>

namespace octa::detail {

/// Shortest decimal text that parses back to exactly `x`.
inline std::string shortest(double x) {
  if (x == 0.0) x = 0.0; // drop the sign of negative zero
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

} // namespace octa::detail
