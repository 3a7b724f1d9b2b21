#pragma once

// Event-driven simulation of a sequential/parallel execution timeline in the
// single-processor-approach style: processor 0 runs every sequential segment
// and every dispatch/collect overhead while the others wait; chunks of a
// parallel phase are handed out in input order to the earliest-free
// processor, so more chunks than processors produces several rounds.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "amdahl/core.hpp"
#include "amdahl/error.hpp"

namespace amdahl {

struct SequentialPhase {
  double duration = 0.0;
};

struct ParallelPhase {
  double dispatch_overhead = 0.0;
  double collect_overhead = 0.0;
  std::vector<double> chunks;
};

using Phase = std::variant<SequentialPhase, ParallelPhase>;

struct WorkloadSpec {
  Cores processors = 1;
  std::vector<Phase> phases;
};

enum class SegmentKind { Sequential, Dispatch, Chunk, Collect };

struct TimelineEntry {
  std::size_t processor = 0;
  double start = 0.0;
  double end = 0.0;
  std::string label;
  SegmentKind kind = SegmentKind::Sequential;
  std::size_t phase = 0;  // index into WorkloadSpec::phases
};

struct ScheduleResult {
  /// Single-processor time: sequential durations plus chunk durations.
  /// Overheads are excluded; they only exist once the work is split.
  double serial_time = 0.0;
  double parallel_time = 0.0;
  Speedup speedup{1.0};
  /// Absent for k = 1 and for slowdowns (S < 1), where 1-alpha_eff > 1.
  std::optional<AlphaEstimate> alpha_eff;
  std::vector<double> per_processor_busy;
  std::vector<double> per_processor_idle;
  std::vector<TimelineEntry> timeline;
};

namespace detail {

inline bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }
inline bool nonnegative_finite(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace detail

inline void validate(const WorkloadSpec& w) {
  auto fail = [](const std::string& why) { throw ModelError(ErrorKind::InvalidWorkload, why); };
  if (w.processors < 1) fail("processors must be >= 1");
  if (w.phases.empty()) fail("workload needs at least one phase");
  for (std::size_t i = 0; i < w.phases.size(); ++i) {
    const std::string where = "phase " + std::to_string(i) + ": ";
    if (const auto* s = std::get_if<SequentialPhase>(&w.phases[i])) {
      if (!detail::positive_finite(s->duration)) fail(where + "sequential duration must be > 0");
      continue;
    }
    const auto& p = std::get<ParallelPhase>(w.phases[i]);
    if (!detail::nonnegative_finite(p.dispatch_overhead) ||
        !detail::nonnegative_finite(p.collect_overhead)) {
      fail(where + "overheads must be >= 0");
    }
    if (p.chunks.empty()) fail(where + "parallel phase needs at least one chunk");
    for (double c : p.chunks) {
      if (!detail::positive_finite(c)) fail(where + "chunk durations must be > 0");
    }
  }
}

inline ScheduleResult simulate(const WorkloadSpec& w) {
  validate(w);
  const auto k = static_cast<std::size_t>(w.processors);

  ScheduleResult r;
  r.per_processor_busy.assign(k, 0.0);
  std::vector<TimelineEntry>& tl = r.timeline;

  double now = 0.0;
  std::size_t seq_no = 0;
  std::size_t par_no = 0;
  std::size_t chunk_no = 0;

  auto run_on_master = [&](double length, std::string label, SegmentKind kind, std::size_t phase) {
    if (length <= 0.0) return;
    tl.push_back({0, now, now + length, std::move(label), kind, phase});
    r.per_processor_busy[0] += length;
    now += length;
  };

  for (std::size_t i = 0; i < w.phases.size(); ++i) {
    if (const auto* s = std::get_if<SequentialPhase>(&w.phases[i])) {
      r.serial_time += s->duration;
      run_on_master(s->duration, "S" + std::to_string(++seq_no), SegmentKind::Sequential, i);
      continue;
    }
    const auto& p = std::get<ParallelPhase>(w.phases[i]);
    ++par_no;
    run_on_master(p.dispatch_overhead, "D" + std::to_string(par_no), SegmentKind::Dispatch, i);

    // (free time, processor); ties go to the lowest index.
    using Slot = std::pair<double, std::size_t>;
    std::priority_queue<Slot, std::vector<Slot>, std::greater<>> free_at;
    for (std::size_t proc = 0; proc < k; ++proc) free_at.emplace(now, proc);

    double phase_end = now;
    for (double c : p.chunks) {
      auto [start, proc] = free_at.top();
      free_at.pop();
      const double end = start + c;
      tl.push_back({proc, start, end, "P" + std::to_string(++chunk_no), SegmentKind::Chunk, i});
      r.per_processor_busy[proc] += c;
      r.serial_time += c;
      phase_end = std::max(phase_end, end);
      free_at.emplace(end, proc);
    }
    now = phase_end;
    run_on_master(p.collect_overhead, "C" + std::to_string(par_no), SegmentKind::Collect, i);
  }

  r.parallel_time = now;
  r.per_processor_idle.resize(k);
  for (std::size_t proc = 0; proc < k; ++proc) {
    r.per_processor_idle[proc] = r.parallel_time - r.per_processor_busy[proc];
  }
  r.speedup = Speedup(r.serial_time / r.parallel_time);
  if (w.processors >= 2 && r.speedup.value() >= 1.0) {
    AlphaEstimate est = alpha_eff_from_speedup(r.speedup, w.processors);
    est.method = Method::Simulated;
    r.alpha_eff = est;
  }
  return r;
}

/// One point of an effective-parallelization sweep.
struct SweepPoint {
  double overhead_ratio = 0.0;
  double sequential_ratio = 0.0;
  std::optional<AlphaEstimate> alpha_eff;
};

/// Builds the workload for one sweep point from a template with exactly one
/// parallel phase:
///  - total overhead (dispatch + collect) becomes overhead_ratio * max chunk,
///    split in the template's dispatch:collect proportion (all on dispatch
///    when the template has none);
///  - every sequential duration is multiplied by (1 + sequential_ratio), so
///    the ratio is the extra sequential time relative to the template total.
inline WorkloadSpec sweep_workload(Cores k, const WorkloadSpec& base, double overhead_ratio,
                                   double sequential_ratio) {
  if (!(overhead_ratio >= 0.0 && sequential_ratio >= 0.0)) {
    throw ModelError(ErrorKind::InvalidArgument, "sweep ratios must be >= 0");
  }
  const auto parallel_count =
      std::count_if(base.phases.begin(), base.phases.end(),
                    [](const Phase& ph) { return std::holds_alternative<ParallelPhase>(ph); });
  if (parallel_count != 1) {
    throw ModelError(ErrorKind::InvalidTemplate, "sweep template must contain exactly one parallel phase");
  }

  WorkloadSpec w = base;
  w.processors = k;
  for (Phase& ph : w.phases) {
    if (auto* s = std::get_if<SequentialPhase>(&ph)) {
      s->duration *= 1.0 + sequential_ratio;
      continue;
    }
    auto& p = std::get<ParallelPhase>(ph);
    if (p.chunks.empty()) {
      throw ModelError(ErrorKind::InvalidTemplate, "template parallel phase has no chunks");
    }
    const double max_chunk = *std::max_element(p.chunks.begin(), p.chunks.end());
    const double total = overhead_ratio * max_chunk;
    const double template_total = p.dispatch_overhead + p.collect_overhead;
    const double dispatch_share = template_total > 0.0 ? p.dispatch_overhead / template_total : 1.0;
    p.dispatch_overhead = total * dispatch_share;
    p.collect_overhead = total - p.dispatch_overhead;
  }
  return w;
}

/// Effective parallelization over an (overhead ratio x sequential ratio)
/// grid. Output is row-major: overhead ratio outer, sequential ratio inner.
inline std::vector<SweepPoint> sweep_alpha_eff(Cores k, const WorkloadSpec& base,
                                               const std::vector<double>& overhead_ratios,
                                               const std::vector<double>& sequential_ratios) {
  std::vector<SweepPoint> grid;
  grid.reserve(overhead_ratios.size() * sequential_ratios.size());
  for (double o : overhead_ratios) {
    for (double s : sequential_ratios) {
      const ScheduleResult r = simulate(sweep_workload(k, base, o, s));
      grid.push_back({o, s, r.alpha_eff});
    }
  }
  return grid;
}

}  // namespace amdahl
