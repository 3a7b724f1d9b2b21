#pragma once

// Performance quantities on the command line are Gflop/s unless suffixed:
// G (1), T (1e3), P (1e6), E (1e9). "229P" is 229 Pflop/s, "1E" one
// exaflop/s. An uppercase E directly followed by digits is an exponent, so
// "229E6" is 229e6 Gflop/s.

#include <optional>
#include <string>
#include <string_view>

#include "amdahl/format.hpp"

namespace amdahl {

inline std::optional<double> parse_performance(std::string_view text) {
  double scale = 1.0;
  if (!text.empty()) {
    switch (text.back()) {
      case 'G': scale = 1.0; text.remove_suffix(1); break;
      case 'T': scale = 1e3; text.remove_suffix(1); break;
      case 'P': scale = 1e6; text.remove_suffix(1); break;
      case 'E': scale = 1e9; text.remove_suffix(1); break;
      default: break;
    }
  }
  double v = 0.0;
  if (!parse_double(text, v)) return std::nullopt;
  return v * scale;
}

/// "2.656e+07 Gflop/s (2.656e+01 Pflop/s)"; the parenthesised form is
/// omitted below 1 Tflop/s.
inline std::string describe_performance(double gflops, int digits) {
  std::string s = format_sci(gflops, digits) + " Gflop/s";
  const double mag = gflops < 0 ? -gflops : gflops;
  const char* unit = nullptr;
  double scaled = gflops;
  if (mag >= 1e9) {
    unit = "Eflop/s";
    scaled = gflops / 1e9;
  } else if (mag >= 1e6) {
    unit = "Pflop/s";
    scaled = gflops / 1e6;
  } else if (mag >= 1e3) {
    unit = "Tflop/s";
    scaled = gflops / 1e3;
  }
  if (unit) s += " (" + format_sci(scaled, digits) + " " + unit + ")";
  return s;
}

}  // namespace amdahl
