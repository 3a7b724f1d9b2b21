#pragma once

// Closed-form Amdahl model: speedup, efficiency, effective parallelization
// and their inverses. The sequential fraction 1-alpha is the canonical
// quantity everywhere; alpha itself is never stored because values such as
// 0.99999996727 carry no usable precision in binary64.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "amdahl/error.hpp"

namespace amdahl {

using Cores = std::int64_t;

enum class Method { FromSpeedup, FromEfficiency, TwoPointSlope, TwoTimings, Simulated, Assumed };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::FromSpeedup: return "from-speedup";
    case Method::FromEfficiency: return "from-efficiency";
    case Method::TwoPointSlope: return "two-point-slope";
    case Method::TwoTimings: return "two-timings";
    case Method::Simulated: return "simulated";
    case Method::Assumed: return "assumed";
  }
  return "unknown";
}

/// A sequential-fraction estimate, 1-alpha in [0, 1], tagged with how it
/// was obtained and (where meaningful) the processor count it belongs to.
struct AlphaEstimate {
  double one_minus_alpha = 1.0;
  std::optional<Cores> cores;
  Method method = Method::Assumed;

  double alpha() const { return 1.0 - one_minus_alpha; }
};

/// Measured T_serial / T_parallel.
class Speedup {
 public:
  explicit Speedup(double value) : value_(value) {
    if (!(std::isfinite(value) && value > 0.0)) {
      throw ModelError(ErrorKind::InvalidArgument, "speedup must be a positive finite number");
    }
  }
  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// Parallel efficiency E = S/k = R_max/R_peak, 0 < E <= 1.
///
/// Besides E itself the type keeps the excess 1/E - 1 = (k-1)(1-alpha).
/// When an efficiency is produced by the model the excess is exact, so
/// inverting back to 1-alpha does not suffer the cancellation 1 - E would
/// cause for E within 1e-9 of one.
class Efficiency {
 public:
  static Efficiency from_value(double e) {
    if (std::isnan(e) || e <= 0.0) {
      throw ModelError(ErrorKind::InvalidArgument, "efficiency must be positive");
    }
    if (e > 1.0) {
      throw ModelError(ErrorKind::Superlinear, "superlinear speedup outside model (efficiency > 1)");
    }
    return Efficiency(e, 1.0 / e - 1.0);
  }

  static Efficiency from_excess(double excess) {
    if (!(excess >= 0.0) || std::isinf(excess)) {
      throw ModelError(ErrorKind::InvalidArgument, "efficiency excess must be finite and >= 0");
    }
    return Efficiency(1.0 / (1.0 + excess), excess);
  }

  double value() const noexcept { return value_; }
  /// 1/E - 1.
  double excess() const noexcept { return excess_; }

 private:
  Efficiency(double value, double excess) : value_(value), excess_(excess) {}
  double value_;
  double excess_;
};

namespace detail {

inline void require_fraction(double one_minus_alpha) {
  if (!(one_minus_alpha >= 0.0 && one_minus_alpha <= 1.0)) {
    throw ModelError(ErrorKind::InvalidArgument, "1-alpha must lie in [0, 1]");
  }
}

inline void require_cores(Cores k, Cores minimum) {
  if (k < minimum) {
    if (minimum >= 2) {
      throw ModelError(ErrorKind::DegenerateK,
                       "effective parallelization needs at least 2 processors, got " +
                           std::to_string(k));
    }
    throw ModelError(ErrorKind::InvalidArgument, "processor count must be >= 1");
  }
}

// Analytic boundaries (S = 1, E = 1/k) should land on exactly 1 even when
// the input carries a rounding error of a few ulp.
inline double snap_to_unit(double v) {
  constexpr double slack = 8 * std::numeric_limits<double>::epsilon();
  if (v > 1.0 && v <= 1.0 + slack) return 1.0;
  if (v < 0.0 && v >= -slack) return 0.0;
  return v;
}

}  // namespace detail

/// S = 1 / ((1-alpha) + alpha/k)
inline Speedup speedup_from_alpha(double one_minus_alpha, Cores k) {
  detail::require_fraction(one_minus_alpha);
  detail::require_cores(k, 1);
  const auto kd = static_cast<double>(k);
  return Speedup(1.0 / (one_minus_alpha + (1.0 - one_minus_alpha) / kd));
}

/// E = 1 / (k(1-alpha) + alpha)
inline Efficiency efficiency_from_alpha(double one_minus_alpha, Cores k) {
  detail::require_fraction(one_minus_alpha);
  detail::require_cores(k, 1);
  return Efficiency::from_excess(static_cast<double>(k - 1) * one_minus_alpha);
}

/// 1-alpha_eff = (k - S) / ((k - 1) S). Same quantity as the Karp-Flatt
/// serial fraction.
inline AlphaEstimate alpha_eff_from_speedup(Speedup s, Cores k) {
  detail::require_cores(k, 2);
  const auto kd = static_cast<double>(k);
  if (s.value() > kd) {
    throw ModelError(ErrorKind::Superlinear, "superlinear speedup outside model (S > k)");
  }
  if (s.value() < 1.0) {
    throw ModelError(ErrorKind::InvalidArgument, "speedup below 1 (slowdown) is outside the model");
  }
  const double oma = (kd - s.value()) / ((kd - 1.0) * s.value());
  return {detail::snap_to_unit(oma), k, Method::FromSpeedup};
}

/// 1-alpha_eff = (1 - E) / (E (k - 1)), evaluated as (1/E - 1)/(k - 1).
inline AlphaEstimate alpha_eff_from_efficiency(Efficiency e, Cores k) {
  detail::require_cores(k, 2);
  const double oma = detail::snap_to_unit(e.excess() / static_cast<double>(k - 1));
  if (oma > 1.0) {
    throw ModelError(ErrorKind::InvalidArgument,
                     "efficiency below 1/k implies a slowdown, outside the model");
  }
  return {oma, k, Method::FromEfficiency};
}

/// 1/E is linear in k with slope 1-alpha; estimate it from two measurements.
inline AlphaEstimate alpha_from_two_efficiencies(Efficiency e1, Cores k1, Efficiency e2, Cores k2) {
  detail::require_cores(k1, 1);
  detail::require_cores(k2, 1);
  if (k1 == k2) {
    throw ModelError(ErrorKind::InvalidArgument, "two-point estimate needs distinct processor counts");
  }
  // 1/E2 - 1/E1 == excess2 - excess1
  const double slope = (e2.excess() - e1.excess()) / static_cast<double>(k2 - k1);
  if (!(slope >= 0.0 && slope < 1.0)) {
    throw ModelError(ErrorKind::InconsistentMeasurements,
                     "slope of 1/E versus k must lie in [0, 1), got " + std::to_string(slope));
  }
  return {slope, std::max(k1, k2), Method::TwoPointSlope};
}

/// Solves T(k) = T1 ((1-alpha) + alpha/k) for 1-alpha given two run times.
/// Unlike the speedup route, one of the measurements may use k = 1.
inline AlphaEstimate alpha_from_two_timings(double t1, Cores k1, double t2, Cores k2) {
  detail::require_cores(k1, 1);
  detail::require_cores(k2, 1);
  if (k1 == k2) {
    throw ModelError(ErrorKind::InvalidArgument, "two-timing estimate needs distinct processor counts");
  }
  if (!(t1 > 0.0 && t2 > 0.0) || std::isinf(t1) || std::isinf(t2)) {
    throw ModelError(ErrorKind::InvalidArgument, "timings must be positive and finite");
  }
  const auto a = static_cast<double>(k1);
  const auto b = static_cast<double>(k2);
  const double numerator = t2 * b - t1 * a;
  const double denominator = a * t1 * (b - 1.0) - b * t2 * (a - 1.0);
  if (denominator == 0.0) {
    throw ModelError(ErrorKind::InconsistentMeasurements, "timings admit no unique solution");
  }
  const double oma = detail::snap_to_unit(numerator / denominator);
  if (!(oma >= 0.0 && oma <= 1.0)) {
    throw ModelError(ErrorKind::InconsistentMeasurements,
                     "timings imply 1-alpha outside [0, 1]: " + std::to_string(oma));
  }
  return {oma, std::max(k1, k2), Method::TwoTimings};
}

/// k -> infinity limit of the speedup, 1/(1-alpha).
inline double max_speedup(double one_minus_alpha) {
  detail::require_fraction(one_minus_alpha);
  if (one_minus_alpha == 0.0) {
    throw ModelError(ErrorKind::Unbounded, "speedup is unbounded for 1-alpha = 0");
  }
  return 1.0 / one_minus_alpha;
}

}  // namespace amdahl
