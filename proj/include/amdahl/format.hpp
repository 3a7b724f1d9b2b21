#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>

#include "amdahl/error.hpp"

namespace amdahl {

/// Scientific notation with `digits` significant digits (1..17).
inline std::string format_sci(double v, int digits) {
  if (digits < 1 || digits > 17) {
    throw ModelError(ErrorKind::InvalidArgument, "precision must be in [1, 17]");
  }
  std::array<char, 64> buf{};
  const int n = std::snprintf(buf.data(), buf.size(), "%.*e", digits - 1, v);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

/// Shortest text that parses back to exactly `v`.
inline std::string format_exact(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

/// Strict full-string number parse. Returns false on trailing garbage.
inline bool parse_double(std::string_view text, double& out) {
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size() && std::isfinite(out);
}

template <typename Int>
bool parse_integer(std::string_view text, Int& out) {
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

}  // namespace amdahl
