#pragma once

// Command-line front end. run() is the whole program minus process setup so
// tests can drive it with in-memory streams.
//
// Exit codes: 0 success, 1 usage error, 2 data or model error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "amdahl/core.hpp"
#include "amdahl/dataset.hpp"
#include "amdahl/error.hpp"
#include "amdahl/format.hpp"
#include "amdahl/projection.hpp"
#include "amdahl/units.hpp"
#include "amdahl/workload.hpp"
#include "amdahl/workload_io.hpp"

namespace amdahl::cli {

enum class Format { Table, Csv };

struct OutputFormat {
  Format format = Format::Table;
  int precision = 4;
};

/// Bad flag combinations or values detected after CLI11 has parsed argv.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Cell {
  std::string csv;
  std::string human;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;
};

class Printer {
 public:
  Printer(std::ostream& out, OutputFormat fmt, std::string command)
      : out_(out), fmt_(fmt), command_(std::move(command)) {}

  Cell num(double v) const {
    auto s = format_sci(v, fmt_.precision);
    return {s, s};
  }
  Cell perf(double gflops) const {
    return {format_sci(gflops, fmt_.precision), describe_performance(gflops, fmt_.precision)};
  }
  Cell exact(double v) const {
    auto s = format_exact(v);
    return {s, s};
  }
  static Cell text(std::string s) { return {s, s}; }
  static Cell integer(long long v) { return text(std::to_string(v)); }

  int precision() const { return fmt_.precision; }
  bool csv() const { return fmt_.format == Format::Csv; }
  const std::string& command() const { return command_; }

  void emit(const Table& t) const {
    if (csv()) {
      out_ << "# " << command_ << '\n';
      for (const auto& n : t.notes) out_ << "# " << n << '\n';
      write_row(t.columns);
      for (const auto& row : t.rows) {
        std::vector<std::string> cells;
        for (const auto& c : row) cells.push_back(c.csv);
        write_row(cells);
      }
      return;
    }
    if (t.rows.size() == 1) {
      std::size_t w = 0;
      for (const auto& c : t.columns) w = std::max(w, c.size());
      for (std::size_t i = 0; i < t.columns.size(); ++i) {
        out_ << t.columns[i] << std::string(w - t.columns[i].size() + 2, ' ') << t.rows[0][i].human
             << '\n';
      }
    } else {
      std::vector<std::size_t> w(t.columns.size());
      for (std::size_t i = 0; i < t.columns.size(); ++i) w[i] = t.columns[i].size();
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].human.size());
      }
      auto line = [&](auto cell_text) {
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
          const std::string s = cell_text(i);
          out_ << s;
          if (i + 1 < t.columns.size()) out_ << std::string(w[i] - s.size() + 2, ' ');
        }
        out_ << '\n';
      };
      line([&](std::size_t i) { return t.columns[i]; });
      for (const auto& row : t.rows) line([&](std::size_t i) { return row[i].human; });
    }
    for (const auto& n : t.notes) out_ << n << '\n';
  }

  /// Blocks after the first are separated by a blank line in table mode.
  void separator() const {
    if (!csv()) out_ << '\n';
  }

 private:
  void write_row(const std::vector<std::string>& cells) const {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << amdahl::detail::quote_csv(cells[i]);
    }
    out_ << '\n';
  }

  std::ostream& out_;
  OutputFormat fmt_;
  std::string command_;
};

namespace detail {

inline double performance_flag(const std::string& flag, const std::string& text) {
  const auto v = parse_performance(text);
  if (!v || !(*v > 0.0)) {
    throw UsageError(flag + ": expected a positive performance such as 229P, 1E or 93014.6T, got '" +
                     text + "'");
  }
  return *v;
}

inline std::vector<MachineRecord> load_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError(ErrorKind::InvalidArgument, "cannot open input file '" + path + "'");
  return parse_records(in);
}

inline std::optional<Benchmark> benchmark_flag(const std::string& s) {
  if (s == "HPL") return Benchmark::HPL;
  if (s == "HPCG") return Benchmark::HPCG;
  if (s == "any") return std::nullopt;
  throw UsageError("--benchmark must be HPL, HPCG or any");
}

inline std::vector<MachineRecord> filter_benchmark(std::vector<MachineRecord> records,
                                                   std::optional<Benchmark> b) {
  if (!b) return records;
  std::erase_if(records, [&](const MachineRecord& r) { return r.benchmark != *b; });
  return records;
}

inline Efficiency efficiency_flag(double e) { return Efficiency::from_value(e); }

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Amdahl-model performance analysis: effective parallelization, TOP500 records, "
               "scaling projections and bounds",
               "amdahl"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "table";
  int precision = 4;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"table", "csv"}));
  app.add_option("--precision", precision, "Significant digits")->check(CLI::Range(1, 17));

  // alpha
  auto* alpha_cmd = app.add_subcommand("alpha", "Estimate 1-alpha_eff from measurements");
  std::optional<double> a_eff, a_speedup, a_e1, a_e2, a_t1, a_t2;
  std::optional<Cores> a_cores, a_k1, a_k2;
  alpha_cmd->add_option("--efficiency", a_eff, "Measured efficiency E = R_max/R_peak");
  alpha_cmd->add_option("--speedup", a_speedup, "Measured speedup S");
  alpha_cmd->add_option("--cores", a_cores, "Processor count for --efficiency/--speedup");
  alpha_cmd->add_option("--e1", a_e1, "Efficiency at k1");
  alpha_cmd->add_option("--e2", a_e2, "Efficiency at k2");
  alpha_cmd->add_option("--t1", a_t1, "Run time at k1");
  alpha_cmd->add_option("--t2", a_t2, "Run time at k2");
  alpha_cmd->add_option("--k1", a_k1, "First processor count");
  alpha_cmd->add_option("--k2", a_k2, "Second processor count");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Simulate a sequential/parallel workload timeline");
  std::string sim_path;
  bool sim_timeline = false;
  sim_cmd->add_option("--workload", sim_path, "Workload JSON file")->required();
  sim_cmd->add_flag("--timeline", sim_timeline, "Emit the per-segment timeline");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "alpha_eff over overhead and sequential ratios");
  std::string sweep_path;
  std::optional<Cores> sweep_k;
  std::vector<double> sweep_over{0.0}, sweep_seq{0.0};
  sweep_cmd->add_option("--workload", sweep_path, "Template workload with one parallel phase")
      ->required();
  sweep_cmd->add_option("--cores", sweep_k, "Processor count (default: template's)");
  sweep_cmd->add_option("--overhead-ratios", sweep_over, "Comma-separated overhead ratios")
      ->delimiter(',');
  sweep_cmd->add_option("--sequential-ratios", sweep_seq, "Comma-separated sequential ratios")
      ->delimiter(',');

  // timeline
  auto* tl_cmd = app.add_subcommand("timeline", "Per-year champions and their semi-log trend");
  std::string tl_input, tl_select, tl_bench = "HPL";
  std::optional<int> tl_top;
  tl_cmd->add_option("--input", tl_input, "Record CSV")->required();
  tl_cmd->add_option("--select", tl_select, "Champion criterion")
      ->required()
      ->check(CLI::IsMember({"best-rmax", "best-alpha"}));
  tl_cmd->add_option("--top", tl_top, "Only consider ranks <= N")->check(CLI::PositiveNumber);
  tl_cmd->add_option("--benchmark", tl_bench, "HPL, HPCG or any");

  // mean-efficiency
  auto* mean_cmd = app.add_subcommand("mean-efficiency", "Per-year mean and sd of R_max/R_peak");
  std::string mean_input, mean_bench = "HPL";
  std::size_t mean_top = 25;
  mean_cmd->add_option("--input", mean_input, "Record CSV")->required();
  mean_cmd->add_option("--top", mean_top, "Best-ranked records per year")
      ->required()
      ->check(CLI::PositiveNumber);
  mean_cmd->add_option("--benchmark", mean_bench, "HPL, HPCG or any");

  // project
  auto* proj_cmd = app.add_subcommand("project", "Efficiency and R_max versus R_peak at fixed 1-alpha");
  std::string proj_input, proj_name, proj_bench = "HPL";
  std::optional<double> proj_oma;
  std::optional<Cores> proj_cores;
  std::string proj_rpeak, proj_from, proj_to;
  std::size_t proj_points = 20;
  proj_cmd->add_option("--input", proj_input, "Record CSV");
  proj_cmd->add_option("--name", proj_name, "Machine name in --input");
  proj_cmd->add_option("--benchmark", proj_bench, "Benchmark of the --name record");
  proj_cmd->add_option("--one-minus-alpha", proj_oma, "Explicit base 1-alpha");
  proj_cmd->add_option("--cores", proj_cores, "Explicit base core count");
  proj_cmd->add_option("--rpeak", proj_rpeak, "Explicit base R_peak");
  proj_cmd->add_option("--rpeak-from", proj_from, "Grid start R_peak")->required();
  proj_cmd->add_option("--rpeak-to", proj_to, "Grid end R_peak")->required();
  proj_cmd->add_option("--points", proj_points, "Grid points (log spaced)")->check(CLI::PositiveNumber);

  // whatif
  auto* what_cmd = app.add_subcommand("whatif", "Rescale a machine, optionally scaling 1-alpha");
  double what_eff = 0.0, what_scale = 1.0;
  Cores what_cores = 0;
  std::optional<Cores> what_new;
  std::string what_rpeak, what_base_rpeak;
  what_cmd->add_option("--efficiency", what_eff, "Measured base efficiency")->required();
  what_cmd->add_option("--cores", what_cores, "Base core count")->required();
  what_cmd->add_option("--new-cores", what_new, "Target core count");
  what_cmd->add_option("--rpeak", what_rpeak, "Target R_peak");
  what_cmd->add_option("--base-rpeak", what_base_rpeak, "Base R_peak (derives a missing target)");
  what_cmd->add_option("--alpha-scale", what_scale, "Multiplier applied to 1-alpha");

  // required-alpha
  auto* req_cmd = app.add_subcommand("required-alpha", "1-alpha needed to hold an efficiency");
  double req_eff = 0.0;
  Cores req_cores = 0;
  req_cmd->add_option("--efficiency", req_eff, "Target efficiency")->required();
  req_cmd->add_option("--cores", req_cores, "Target core count")->required();

  // bounds
  auto* bnd_cmd = app.add_subcommand("bounds", "Absolute limits from a non-parallelizable cycle budget");
  double bnd_clock = 0.0, bnd_runtime = 0.0, bnd_hw = 0.0, bnd_os = 0.0, bnd_sw = 0.0;
  std::optional<double> bnd_size;
  std::string bnd_flops;
  bnd_cmd->add_option("--clock-hz", bnd_clock, "Clock frequency")->required();
  bnd_cmd->add_option("--runtime-s", bnd_runtime, "Benchmark run time")->required();
  bnd_cmd->add_option("--hw-cycles", bnd_hw, "Hardware cycles");
  bnd_cmd->add_option("--os-cycles", bnd_os, "Operating-system cycles");
  bnd_cmd->add_option("--sw-cycles", bnd_sw, "Software cycles");
  bnd_cmd->add_option("--size-m", bnd_size, "Physical size (adds a signal round trip)");
  bnd_cmd->add_option("--per-proc-flops", bnd_flops, "Single-processor performance");

  // saturation
  auto* sat_cmd = app.add_subcommand("saturation", "R_max asymptote for unlimited cores");
  std::string sat_flops;
  double sat_oma = 0.0;
  sat_cmd->add_option("--per-proc-flops", sat_flops, "Single-processor peak")->required();
  sat_cmd->add_option("--one-minus-alpha", sat_oma, "Sequential fraction")->required();

  std::string command = "amdahl";
  for (const auto& a : args) command += " " + a;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  const OutputFormat fmt{format_name == "csv" ? Format::Csv : Format::Table, precision};
  const Printer p(out, fmt, command);

  try {
    if (alpha_cmd->parsed()) {
      const int modes = (a_eff ? 1 : 0) + (a_speedup ? 1 : 0) + ((a_e1 || a_e2) ? 1 : 0) +
                        ((a_t1 || a_t2) ? 1 : 0);
      if (modes != 1) {
        throw UsageError("alpha: give exactly one of --efficiency, --speedup, --e1/--e2, --t1/--t2");
      }
      AlphaEstimate est;
      if (a_eff || a_speedup) {
        if (!a_cores) throw UsageError("alpha: --cores is required");
        est = a_eff ? alpha_eff_from_efficiency(detail::efficiency_flag(*a_eff), *a_cores)
                    : alpha_eff_from_speedup(Speedup(*a_speedup), *a_cores);
      } else if (a_e1 || a_e2) {
        if (!(a_e1 && a_e2 && a_k1 && a_k2)) throw UsageError("alpha: need --e1 --k1 --e2 --k2");
        est = alpha_from_two_efficiencies(detail::efficiency_flag(*a_e1), *a_k1,
                                          detail::efficiency_flag(*a_e2), *a_k2);
      } else {
        if (!(a_t1 && a_t2 && a_k1 && a_k2)) throw UsageError("alpha: need --t1 --k1 --t2 --k2");
        est = alpha_from_two_timings(*a_t1, *a_k1, *a_t2, *a_k2);
      }
      Table t;
      t.columns = {"method", "cores", "one_minus_alpha", "alpha", "max_speedup"};
      t.rows.push_back({Printer::text(std::string(to_string(est.method))),
                        Printer::integer(est.cores.value_or(0)), p.num(est.one_minus_alpha),
                        p.num(est.alpha()),
                        est.one_minus_alpha > 0.0 ? p.num(max_speedup(est.one_minus_alpha))
                                                  : Printer::text("unbounded")});
      p.emit(t);
      return 0;
    }

    if (sim_cmd->parsed()) {
      std::ifstream in(sim_path);
      if (!in) throw ModelError(ErrorKind::InvalidArgument, "cannot open workload '" + sim_path + "'");
      const WorkloadSpec w = read_workload(in);
      const ScheduleResult r = simulate(w);

      Table summary;
      summary.columns = {"processors", "serial_time", "parallel_time", "speedup", "one_minus_alpha_eff",
                         "alpha_eff"};
      summary.rows.push_back(
          {Printer::integer(w.processors), p.num(r.serial_time), p.num(r.parallel_time),
           p.num(r.speedup.value()),
           r.alpha_eff ? p.num(r.alpha_eff->one_minus_alpha) : Printer::text("n/a"),
           r.alpha_eff ? p.num(r.alpha_eff->alpha()) : Printer::text("n/a")});

      if (!sim_timeline) {
        p.emit(summary);
        p.separator();
        Table procs;
        procs.columns = {"processor", "busy", "idle"};
        for (std::size_t i = 0; i < r.per_processor_busy.size(); ++i) {
          procs.rows.push_back({Printer::integer(static_cast<long long>(i)),
                                p.num(r.per_processor_busy[i]), p.num(r.per_processor_idle[i])});
        }
        if (!p.csv()) p.emit(procs);
        return 0;
      }
      Table tl;
      tl.columns = {"processor", "start", "end", "label"};
      for (const auto& e : r.timeline) {
        tl.rows.push_back({Printer::integer(static_cast<long long>(e.processor)), p.exact(e.start),
                           p.exact(e.end), Printer::text(e.label)});
      }
      tl.notes.push_back("speedup=" + format_sci(r.speedup.value(), p.precision()) +
                         " parallel_time=" + format_sci(r.parallel_time, p.precision()));
      p.emit(tl);
      return 0;
    }

    if (sweep_cmd->parsed()) {
      std::ifstream in(sweep_path);
      if (!in) throw ModelError(ErrorKind::InvalidArgument, "cannot open workload '" + sweep_path + "'");
      const WorkloadSpec base = read_workload(in);
      const auto grid = sweep_alpha_eff(sweep_k.value_or(base.processors), base, sweep_over, sweep_seq);
      Table t;
      t.columns = {"overhead_ratio", "sequential_ratio", "alpha_eff"};
      for (const auto& pt : grid) {
        t.rows.push_back({p.num(pt.overhead_ratio), p.num(pt.sequential_ratio),
                          pt.alpha_eff ? p.num(pt.alpha_eff->alpha()) : Printer::text("n/a")});
      }
      p.emit(t);
      return 0;
    }

    if (tl_cmd->parsed()) {
      auto records = detail::filter_benchmark(detail::load_records(tl_input),
                                              detail::benchmark_flag(tl_bench));
      if (tl_top) std::erase_if(records, [&](const MachineRecord& r) { return r.rank > *tl_top; });
      if (records.empty()) throw ModelError(ErrorKind::InvalidArgument, "no records match the filters");
      const auto by = tl_select == "best-rmax" ? ChampionCriterion::BestRmax : ChampionCriterion::BestAlpha;
      const auto champs = select_champions(records, by);

      std::vector<std::pair<double, double>> pts;
      for (const auto& c : champs) pts.emplace_back(c.year, derive(c).one_minus_alpha_eff);
      std::string fit_note = "semilog fit: n/a (needs two distinct years with 1-alpha > 0)";
      const bool fittable = pts.size() >= 2 &&
                            std::all_of(pts.begin(), pts.end(), [](auto& q) { return q.second > 0.0; });
      if (fittable) {
        const RegressionFit f = fit_semilog(pts);
        fit_note = "semilog fit: log10(1-alpha) = " + format_sci(f.intercept, p.precision()) + " + " +
                   format_sci(f.slope, p.precision()) + " * year; r2=" +
                   format_sci(f.r_squared, p.precision()) + " n=" + std::to_string(f.n);
      }
      if (p.csv()) {
        write_records(out, champs, {p.command(), fit_note}, true, p.precision());
        return 0;
      }
      Table t;
      t.columns = {"year", "rank", "name", "cores", "efficiency", "one_minus_alpha_eff"};
      for (const auto& c : champs) {
        const auto d = derive(c);
        t.rows.push_back({Printer::integer(c.year), Printer::integer(c.rank), Printer::text(c.name),
                          Printer::integer(c.cores), p.num(d.efficiency.value()),
                          p.num(d.one_minus_alpha_eff)});
      }
      t.notes.push_back(fit_note);
      p.emit(t);
      return 0;
    }

    if (mean_cmd->parsed()) {
      const auto records = detail::filter_benchmark(detail::load_records(mean_input),
                                                    detail::benchmark_flag(mean_bench));
      Table t;
      t.columns = {"year", "mean_efficiency", "sd_efficiency", "count"};
      for (const auto& y : yearly_mean_efficiency(records, mean_top)) {
        t.rows.push_back({Printer::integer(y.year), p.num(y.mean), p.num(y.stddev),
                          Printer::integer(static_cast<long long>(y.count))});
      }
      t.notes.push_back("standard deviation is the population form");
      p.emit(t);
      return 0;
    }

    if (proj_cmd->parsed()) {
      BaseMachine base;
      const bool from_file = !proj_input.empty();
      const bool explicit_base = proj_oma || proj_cores || !proj_rpeak.empty();
      if (from_file == explicit_base) {
        throw UsageError("project: give either --input/--name or --one-minus-alpha/--cores/--rpeak");
      }
      if (from_file) {
        if (proj_name.empty()) throw UsageError("project: --name is required with --input");
        const auto bench = detail::benchmark_flag(proj_bench);
        const auto records = detail::load_records(proj_input);
        const auto it = std::find_if(records.begin(), records.end(), [&](const MachineRecord& r) {
          return r.name == proj_name && (!bench || r.benchmark == *bench);
        });
        if (it == records.end()) {
          throw ModelError(ErrorKind::InvalidArgument, "no record named '" + proj_name + "'");
        }
        base = {it->cores, it->rpeak_gflops, derive(*it).one_minus_alpha_eff};
      } else {
        if (!(proj_oma && proj_cores && !proj_rpeak.empty())) {
          throw UsageError("project: need --one-minus-alpha, --cores and --rpeak together");
        }
        base = {*proj_cores, detail::performance_flag("--rpeak", proj_rpeak), *proj_oma};
      }
      const auto grid = log_grid(detail::performance_flag("--rpeak-from", proj_from),
                                 detail::performance_flag("--rpeak-to", proj_to), proj_points);
      const auto curve = project_curve(base, grid);
      Table t;
      t.columns = {"rpeak_gflops", "cores", "efficiency", "rmax_gflops"};
      for (const auto& s : curve.samples) {
        t.rows.push_back({p.perf(s.rpeak), Printer::integer(s.cores), p.num(s.efficiency.value()),
                          p.perf(s.rmax)});
      }
      t.notes.push_back("base: cores=" + std::to_string(base.cores) +
                        " rpeak_gflops=" + format_sci(base.rpeak, p.precision()) +
                        " one_minus_alpha=" + format_sci(base.one_minus_alpha, p.precision()));
      if (base.one_minus_alpha > 0.0) {
        const double sat = saturation_rmax(base.rpeak / static_cast<double>(base.cores),
                                           base.one_minus_alpha);
        t.notes.push_back("saturation rmax: " + describe_performance(sat, p.precision()));
      }
      p.emit(t);
      return 0;
    }

    if (what_cmd->parsed()) {
      const AlphaEstimate base = alpha_eff_from_efficiency(detail::efficiency_flag(what_eff), what_cores);
      ScalingScenario s;
      s.base_one_minus_alpha = base.one_minus_alpha;
      s.base_cores = what_cores;
      s.alpha_scale_factor = what_scale;
      s.target_cores = what_new;
      if (!what_rpeak.empty()) s.target_rpeak = detail::performance_flag("--rpeak", what_rpeak);
      if (!what_base_rpeak.empty()) s.base_rpeak = detail::performance_flag("--base-rpeak", what_base_rpeak);
      if (!s.target_cores && !s.target_rpeak) throw UsageError("whatif: need --new-cores and/or --rpeak");
      const WhatIfResult r = whatif(s);
      Table t;
      t.columns = {"one_minus_alpha", "cores", "rpeak_gflops", "efficiency", "rmax_gflops"};
      t.rows.push_back({p.num(r.one_minus_alpha), Printer::integer(r.cores), p.perf(r.rpeak),
                        p.num(r.efficiency.value()), p.perf(r.rmax)});
      p.emit(t);
      return 0;
    }

    if (req_cmd->parsed()) {
      const double oma = required_one_minus_alpha(detail::efficiency_flag(req_eff), req_cores);
      Table t;
      t.columns = {"efficiency", "cores", "required_one_minus_alpha"};
      t.rows.push_back({p.num(req_eff), Printer::integer(req_cores), p.num(oma)});
      p.emit(t);
      return 0;
    }

    if (bnd_cmd->parsed()) {
      ContributionBudget b;
      b.clock_hz = bnd_clock;
      b.total_time_s = bnd_runtime;
      b.hw_cycles = bnd_hw;
      b.os_cycles = bnd_os;
      b.sw_cycles = bnd_sw;
      b.physical_size_m = bnd_size;
      if (!bnd_flops.empty()) {
        b.per_processor_flops = detail::performance_flag("--per-proc-flops", bnd_flops) * 1e9;
      }
      const BoundsResult r = bounds(b);
      Table t;
      t.columns = {"total_cycles", "propagation_cycles", "one_minus_alpha_limit", "max_speedup",
                   "max_throughput_flops"};
      std::vector<Cell> row = {p.num(r.total_cycles), p.num(r.propagation_cycles),
                               p.num(r.one_minus_alpha_limit), p.num(r.max_speedup),
                               r.max_throughput_flops ? p.num(*r.max_throughput_flops)
                                                      : Printer::text("n/a")};
      for (const auto& c : r.breakdown) {
        t.columns.push_back("share_" + c.name);
        row.push_back(p.num(c.share));
      }
      t.rows.push_back(std::move(row));
      p.emit(t);
      return 0;
    }

    if (sat_cmd->parsed()) {
      const double sat = saturation_rmax(detail::performance_flag("--per-proc-flops", sat_flops), sat_oma);
      Table t;
      t.columns = {"saturation_rmax_gflops"};
      t.rows.push_back({p.perf(sat)});
      p.emit(t);
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ModelError& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace amdahl::cli
