#pragma once

// Forward scaling with a fixed 1-alpha: efficiency and payload curves versus
// nominal peak, what-if scenarios, the 1-alpha needed to hold an efficiency
// at a larger size, the k -> infinity payload asymptote, and absolute limits
// from a budget of non-parallelizable clock cycles.
//
// Performance values are unit-agnostic here; callers use Gflop/s except for
// ContributionBudget, which is in flop/s.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "amdahl/core.hpp"
#include "amdahl/error.hpp"

namespace amdahl {

inline constexpr double kSpeedOfLight = 2.998e8;  // m/s

struct BaseMachine {
  Cores cores = 1;
  double rpeak = 0.0;
  double one_minus_alpha = 0.0;
};

struct CurveSample {
  double rpeak = 0.0;
  Cores cores = 1;
  Efficiency efficiency = Efficiency::from_excess(0.0);
  double rmax = 0.0;
};

struct ProjectionCurve {
  std::vector<CurveSample> samples;
};

/// Processor count that delivers `rpeak` at the base machine's per-core
/// peak, rounded to nearest, at least 1.
inline Cores scaled_cores(const BaseMachine& base, double rpeak) {
  const double k = std::round(static_cast<double>(base.cores) * (rpeak / base.rpeak));
  return k < 1.0 ? Cores{1} : static_cast<Cores>(k);
}

inline ProjectionCurve project_curve(const BaseMachine& base, const std::vector<double>& rpeak_grid) {
  if (base.cores < 1 || !(base.rpeak > 0.0)) {
    throw ModelError(ErrorKind::InvalidArgument, "base machine needs cores >= 1 and rpeak > 0");
  }
  ProjectionCurve curve;
  curve.samples.reserve(rpeak_grid.size());
  for (double rp : rpeak_grid) {
    if (!(rp > 0.0) || !std::isfinite(rp)) {
      throw ModelError(ErrorKind::InvalidGrid, "projection grid values must be positive");
    }
    const Cores k = scaled_cores(base, rp);
    const Efficiency e = efficiency_from_alpha(base.one_minus_alpha, k);
    curve.samples.push_back({rp, k, e, e.value() * rp});
  }
  return curve;
}

/// `points` logarithmically spaced values from `from` to `to` inclusive.
inline std::vector<double> log_grid(double from, double to, std::size_t points) {
  if (!(from > 0.0 && to > 0.0) || points == 0) {
    throw ModelError(ErrorKind::InvalidGrid, "log grid needs positive bounds and at least one point");
  }
  if (points == 1) return {from};
  std::vector<double> grid(points);
  const double lo = std::log10(from);
  const double step = (std::log10(to) - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = std::pow(10.0, lo + step * static_cast<double>(i));
  grid.front() = from;
  grid.back() = to;
  return grid;
}

/// lim_{k->inf} E * R_peak = per-processor peak / (1-alpha).
inline double saturation_rmax(double per_processor_peak, double one_minus_alpha) {
  detail::require_fraction(one_minus_alpha);
  if (!(per_processor_peak > 0.0)) {
    throw ModelError(ErrorKind::InvalidArgument, "per-processor peak must be positive");
  }
  if (one_minus_alpha == 0.0) {
    throw ModelError(ErrorKind::Unbounded, "payload performance is unbounded for 1-alpha = 0");
  }
  return per_processor_peak / one_minus_alpha;
}

/// A machine rescaled to a new size, optionally with a worse (or better)
/// sequential fraction. Supply target_cores, target_rpeak or both; a
/// missing one is derived from the base per-core peak, which then requires
/// base_rpeak.
struct ScalingScenario {
  double base_one_minus_alpha = 0.0;
  Cores base_cores = 1;
  std::optional<double> base_rpeak;
  double alpha_scale_factor = 1.0;
  std::optional<Cores> target_cores;
  std::optional<double> target_rpeak;
};

struct WhatIfResult {
  Cores cores = 1;
  double rpeak = 0.0;
  Efficiency efficiency = Efficiency::from_excess(0.0);
  double rmax = 0.0;
  double one_minus_alpha = 0.0;
};

inline WhatIfResult whatif(const ScalingScenario& s) {
  detail::require_fraction(s.base_one_minus_alpha);
  detail::require_cores(s.base_cores, 1);
  if (!(s.alpha_scale_factor >= 0.0) || !std::isfinite(s.alpha_scale_factor)) {
    throw ModelError(ErrorKind::InvalidArgument, "alpha scale factor must be >= 0");
  }
  if (!s.target_cores && !s.target_rpeak) {
    throw ModelError(ErrorKind::InvalidArgument, "scenario needs target cores or target rpeak");
  }
  if ((!s.target_cores || !s.target_rpeak) && !(s.base_rpeak && *s.base_rpeak > 0.0)) {
    throw ModelError(ErrorKind::InvalidArgument, "deriving the missing target needs a positive base rpeak");
  }
  const double scaled = s.base_one_minus_alpha * s.alpha_scale_factor;
  if (scaled > 1.0) {
    throw ModelError(ErrorKind::AlphaOverflow,
                     "scaled 1-alpha exceeds 1 (" + std::to_string(scaled) + ")");
  }

  WhatIfResult r;
  r.one_minus_alpha = scaled;
  if (s.target_cores) {
    r.cores = *s.target_cores;
  } else {
    r.cores = scaled_cores({s.base_cores, *s.base_rpeak, scaled}, *s.target_rpeak);
  }
  detail::require_cores(r.cores, 1);
  r.rpeak = s.target_rpeak ? *s.target_rpeak
                           : *s.base_rpeak * (static_cast<double>(r.cores) /
                                                 static_cast<double>(s.base_cores));
  if (!(r.rpeak > 0.0)) throw ModelError(ErrorKind::InvalidArgument, "target rpeak must be positive");
  r.efficiency = efficiency_from_alpha(scaled, r.cores);
  r.rmax = r.efficiency.value() * r.rpeak;
  return r;
}

/// The 1-alpha that keeps efficiency `target` at `target_cores` processors:
/// (1/E - 1) / (k - 1).
inline double required_one_minus_alpha(Efficiency target, Cores target_cores) {
  detail::require_cores(target_cores, 2);
  const double oma = detail::snap_to_unit(target.excess() / static_cast<double>(target_cores - 1));
  if (oma > 1.0) {
    throw ModelError(ErrorKind::Infeasible, "efficiency below 1/k cannot be held at " +
                                                std::to_string(target_cores) + " processors");
  }
  return oma;
}

/// Non-parallelizable work expressed in clock cycles.
struct ContributionBudget {
  double clock_hz = 0.0;
  double total_time_s = 0.0;
  double hw_cycles = 0.0;
  double os_cycles = 0.0;
  double sw_cycles = 0.0;
  std::optional<double> physical_size_m;      // adds one signal round trip
  std::optional<double> per_processor_flops;  // flop/s of a single processor
};

struct Contribution {
  std::string name;
  double cycles = 0.0;
  double share = 0.0;
};

struct BoundsResult {
  double total_cycles = 0.0;
  double propagation_cycles = 0.0;
  double one_minus_alpha_limit = 0.0;
  double max_speedup = 0.0;
  std::optional<double> max_throughput_flops;
  std::vector<Contribution> breakdown;  // hw, os, sw, propagation
};

/// Signal round trip across `size_m` metres, in clock cycles.
inline double propagation_cycles(double size_m, double clock_hz) {
  return 2.0 * size_m / kSpeedOfLight * clock_hz;
}

inline BoundsResult bounds(const ContributionBudget& b) {
  auto nonneg = [](double v) { return v >= 0.0 && std::isfinite(v); };
  if (!(b.clock_hz > 0.0 && b.total_time_s > 0.0) || !std::isfinite(b.clock_hz) ||
      !std::isfinite(b.total_time_s)) {
    throw ModelError(ErrorKind::InvalidArgument, "clock and runtime must be positive");
  }
  if (!nonneg(b.hw_cycles) || !nonneg(b.os_cycles) || !nonneg(b.sw_cycles) ||
      (b.physical_size_m && !nonneg(*b.physical_size_m)) ||
      (b.per_processor_flops && !(*b.per_processor_flops > 0.0))) {
    throw ModelError(ErrorKind::InvalidArgument, "budget contributions must be nonnegative");
  }

  BoundsResult r;
  r.total_cycles = b.clock_hz * b.total_time_s;
  r.propagation_cycles = b.physical_size_m ? propagation_cycles(*b.physical_size_m, b.clock_hz) : 0.0;
  const double sequential = b.hw_cycles + b.os_cycles + b.sw_cycles + r.propagation_cycles;
  if (sequential == 0.0) {
    throw ModelError(ErrorKind::ZeroBudget,
                     "no non-parallelizable cycles: 1-alpha limit is 0 and throughput is unbounded");
  }
  r.one_minus_alpha_limit = sequential / r.total_cycles;
  if (r.one_minus_alpha_limit > 1.0) {
    throw ModelError(ErrorKind::InvalidArgument, "non-parallelizable cycles exceed the total run");
  }
  r.max_speedup = 1.0 / r.one_minus_alpha_limit;
  if (b.per_processor_flops) r.max_throughput_flops = r.max_speedup * *b.per_processor_flops;
  r.breakdown = {{"hw", b.hw_cycles, b.hw_cycles / sequential},
                 {"os", b.os_cycles, b.os_cycles / sequential},
                 {"sw", b.sw_cycles, b.sw_cycles / sequential},
                 {"propagation", r.propagation_cycles, r.propagation_cycles / sequential}};
  return r;
}

}  // namespace amdahl
