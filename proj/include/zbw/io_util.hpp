#pragma once

#include <charconv>
#include <string>

namespace zbw {

/// Shortest round-trip decimal representation; keeps repeated runs
/// byte-identical. Negative zero is folded into plain zero.
inline std::string format_double(double v) {
  if (v == 0.0) return "0";
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace zbw
