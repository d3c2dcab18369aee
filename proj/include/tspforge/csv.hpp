#pragma once

#include <charconv>
#include <cstdint>
#include <string>

namespace tspforge {

// Shortest round-trip decimal form; '.' decimal point, no locale. All CSV
// artifacts are written through these so replays are byte-identical.
inline void append_double(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

inline std::string double_str(double v) {
  std::string s;
  append_double(s, v);
  return s;
}

}  // namespace tspforge
