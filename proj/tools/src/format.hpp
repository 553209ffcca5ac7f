#pragma once

#include <charconv>
#include <optional>
#include <string>

namespace resum::cli {

// Table precision: six significant digits, general notation.
inline std::string sig6(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 6);
  return std::string(buf, r.ptr);
}

inline std::string sig6(const std::optional<double>& x) { return x ? sig6(*x) : std::string(); }

// Shortest text that reads back to the same double.
inline std::string shortest(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

inline double rounded6(double x) {
  const std::string s = sig6(x);
  double v = x;
  std::from_chars(s.data(), s.data() + s.size(), v);
  return v;
}

}  // namespace resum::cli
