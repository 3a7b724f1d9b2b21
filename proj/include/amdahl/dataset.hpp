#pragma once

// TOP500-style benchmark records: CSV ingestion, derived efficiency and
// 1-alpha_eff columns, per-year champion selection, semi-log trend fits and
// per-year efficiency statistics.
//
// CSV layout (performance in Gflop/s):
//
//   year,rank,name,arch,cores,rmax_gflops,rpeak_gflops,benchmark
//   2017,1,TaihuLight,MPP,10649600,93014600,125435900,HPL
//
// Lines starting with '#' are comments and may appear anywhere. Columns
// after the eighth are ignored, so files written with derived columns read
// back unchanged.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "amdahl/core.hpp"
#include "amdahl/error.hpp"
#include "amdahl/format.hpp"

namespace amdahl {

enum class ArchClass { MPP, Cluster, Other };
enum class Benchmark { HPL, HPCG };

inline std::string_view to_string(ArchClass a) {
  switch (a) {
    case ArchClass::MPP: return "MPP";
    case ArchClass::Cluster: return "Cluster";
    case ArchClass::Other: return "Other";
  }
  return "Other";
}

inline std::string_view to_string(Benchmark b) { return b == Benchmark::HPL ? "HPL" : "HPCG"; }

struct MachineRecord {
  int year = 0;
  int rank = 1;
  std::string name;
  ArchClass arch = ArchClass::Other;
  Cores cores = 1;
  double rmax_gflops = 0.0;
  double rpeak_gflops = 0.0;
  Benchmark benchmark = Benchmark::HPL;

  friend bool operator==(const MachineRecord&, const MachineRecord&) = default;
};

struct DerivedMetrics {
  Efficiency efficiency;
  double one_minus_alpha_eff;
};

struct RegressionFit {
  double slope = 0.0;      // change of log10(1-alpha) per unit x
  double intercept = 0.0;  // log10(1-alpha) at x = 0
  double r_squared = 0.0;
  std::size_t n = 0;

  double predict(double x) const { return std::pow(10.0, intercept + slope * x); }
};

struct YearlyEfficiency {
  int year = 0;
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
  std::size_t count = 0;
};

enum class ChampionCriterion { BestRmax, BestAlpha };
enum class GroupBy { Year };

inline constexpr std::string_view kRecordHeader =
    "year,rank,name,arch,cores,rmax_gflops,rpeak_gflops,benchmark";

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// RFC 4180-ish: fields may be double-quoted, "" escapes a quote.
inline std::vector<std::string> split_csv(std::string_view line, bool& ok) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  ok = true;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) ok = false;
  fields.emplace_back(trim(cur));
  return fields;
}

inline std::string quote_csv(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline bool parse_arch(std::string_view s, ArchClass& out) {
  if (s == "MPP") out = ArchClass::MPP;
  else if (s == "Cluster") out = ArchClass::Cluster;
  else if (s == "Other") out = ArchClass::Other;
  else return false;
  return true;
}

inline bool parse_benchmark(std::string_view s, Benchmark& out) {
  if (s == "HPL") out = Benchmark::HPL;
  else if (s == "HPCG") out = Benchmark::HPCG;
  else return false;
  return true;
}

}  // namespace detail

inline std::vector<MachineRecord> parse_records(std::istream& in) {
  std::vector<MachineRecord> records;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = detail::trim(line);
    if (view.empty() || view.front() == '#') continue;

    bool ok = true;
    const auto fields = detail::split_csv(view, ok);
    if (!header_seen) {
      static constexpr std::array<std::string_view, 8> names = {
          "year", "rank", "name", "arch", "cores", "rmax_gflops", "rpeak_gflops", "benchmark"};
      const bool match = ok && fields.size() >= names.size() &&
                         std::equal(names.begin(), names.end(), fields.begin());
      if (!match) {
        throw ModelError(ErrorKind::MissingHeader,
                         "expected header '" + std::string(kRecordHeader) + "' on line " +
                             std::to_string(line_no));
      }
      header_seen = true;
      continue;
    }

    auto fail = [&](const std::string& why) {
      throw ModelError(ErrorKind::MalformedRow, "line " + std::to_string(line_no) + ": " + why);
    };
    if (!ok) fail("unterminated quoted field");
    if (fields.size() < 8) fail("expected 8 fields, got " + std::to_string(fields.size()));

    MachineRecord r;
    if (!parse_integer(fields[0], r.year)) fail("bad year '" + fields[0] + "'");
    if (!parse_integer(fields[1], r.rank) || r.rank < 1) fail("rank must be a positive integer");
    r.name = fields[2];
    if (r.name.empty()) fail("empty name");
    if (!detail::parse_arch(fields[3], r.arch)) fail("arch must be MPP, Cluster or Other");
    if (!parse_integer(fields[4], r.cores) || r.cores < 1) fail("cores must be an integer >= 1");
    if (!parse_double(fields[5], r.rmax_gflops) || r.rmax_gflops <= 0.0) fail("rmax must be > 0");
    if (!parse_double(fields[6], r.rpeak_gflops) || r.rpeak_gflops <= 0.0) fail("rpeak must be > 0");
    if (r.rmax_gflops > r.rpeak_gflops) fail("rmax exceeds rpeak");
    if (!detail::parse_benchmark(fields[7], r.benchmark)) fail("benchmark must be HPL or HPCG");
    records.push_back(std::move(r));
  }
  if (!header_seen) {
    throw ModelError(ErrorKind::MissingHeader, "input has no header row");
  }
  return records;
}

inline DerivedMetrics derive(const MachineRecord& r) {
  const Efficiency e = Efficiency::from_value(r.rmax_gflops / r.rpeak_gflops);
  return {e, alpha_eff_from_efficiency(e, r.cores).one_minus_alpha};
}

/// Writes records in the input CSV layout. Record fields use the shortest
/// exact representation so the output parses back losslessly; with
/// `with_derived` the efficiency and 1-alpha_eff columns are appended using
/// `digits` significant digits.
inline void write_records(std::ostream& out, const std::vector<MachineRecord>& records,
                          const std::vector<std::string>& comments = {}, bool with_derived = false,
                          int digits = 4) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << kRecordHeader;
  if (with_derived) out << ",efficiency,one_minus_alpha_eff";
  out << '\n';
  for (const auto& r : records) {
    out << r.year << ',' << r.rank << ',' << detail::quote_csv(r.name) << ',' << to_string(r.arch)
        << ',' << r.cores << ',' << format_exact(r.rmax_gflops) << ','
        << format_exact(r.rpeak_gflops) << ',' << to_string(r.benchmark);
    if (with_derived) {
      const DerivedMetrics d = derive(r);
      out << ',' << format_sci(d.efficiency.value(), digits) << ','
          << format_sci(d.one_minus_alpha_eff, digits);
    }
    out << '\n';
  }
}

/// Per year, the record with the highest R_max (BestRmax) or the lowest
/// 1-alpha_eff (BestAlpha). Ties go to the lower rank, then the smaller
/// name. Output is ordered by year.
inline std::vector<MachineRecord> select_champions(const std::vector<MachineRecord>& records,
                                                   ChampionCriterion by,
                                                   GroupBy group = GroupBy::Year) {
  (void)group;  // year is the only grouping key
  if (records.empty()) {
    throw ModelError(ErrorKind::InvalidArgument, "champion selection needs at least one record");
  }
  std::vector<double> key(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    key[i] = by == ChampionCriterion::BestRmax ? -records[i].rmax_gflops
                                               : derive(records[i]).one_minus_alpha_eff;
  }
  std::map<int, std::size_t> best;
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto [it, inserted] = best.try_emplace(records[i].year, i);
    if (inserted) continue;
    const std::size_t j = it->second;
    const auto lhs = std::tie(key[i], records[i].rank, records[i].name);
    const auto rhs = std::tie(key[j], records[j].rank, records[j].name);
    if (lhs < rhs) it->second = i;
  }
  std::vector<MachineRecord> out;
  out.reserve(best.size());
  for (const auto& [year, idx] : best) out.push_back(records[idx]);
  return out;
}

/// Ordinary least squares of log10(1-alpha) on x.
inline RegressionFit fit_semilog(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) {
    throw ModelError(ErrorKind::DegenerateFit, "semi-log fit needs at least two points");
  }
  std::vector<double> ys;
  ys.reserve(points.size());
  for (const auto& [x, v] : points) {
    if (!(v > 0.0) || !std::isfinite(v) || !std::isfinite(x)) {
      throw ModelError(ErrorKind::NonpositiveValue, "semi-log fit needs finite 1-alpha > 0");
    }
    ys.push_back(std::log10(v));
  }
  const auto n = static_cast<double>(points.size());
  double x_mean = 0.0;
  double y_mean = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    x_mean += points[i].first;
    y_mean += ys[i];
  }
  x_mean /= n;
  y_mean /= n;

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double dx = points[i].first - x_mean;
    const double dy = ys[i] - y_mean;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) {
    throw ModelError(ErrorKind::DegenerateFit, "semi-log fit needs at least two distinct x values");
  }
  RegressionFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = y_mean - fit.slope * x_mean;
  fit.n = points.size();
  fit.r_squared = syy == 0.0 ? 1.0 : std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
  return fit;
}

/// Mean and population standard deviation of R_max/R_peak per year over
/// the `top_n` best-ranked records of that year.
inline std::vector<YearlyEfficiency> yearly_mean_efficiency(const std::vector<MachineRecord>& records,
                                                            std::size_t top_n) {
  if (top_n == 0) throw ModelError(ErrorKind::InvalidArgument, "top_n must be >= 1");
  std::map<int, std::vector<const MachineRecord*>> by_year;
  for (const auto& r : records) by_year[r.year].push_back(&r);

  std::vector<YearlyEfficiency> out;
  for (auto& [year, group] : by_year) {
    std::stable_sort(group.begin(), group.end(),
                     [](const MachineRecord* a, const MachineRecord* b) { return a->rank < b->rank; });
    const std::size_t m = std::min(top_n, group.size());
    double mean = 0.0;
    for (std::size_t i = 0; i < m; ++i) mean += group[i]->rmax_gflops / group[i]->rpeak_gflops;
    mean /= static_cast<double>(m);
    double var = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double d = group[i]->rmax_gflops / group[i]->rpeak_gflops - mean;
      var += d * d;
    }
    var /= static_cast<double>(m);
    out.push_back({year, mean, std::sqrt(var), m});
  }
  return out;
}

/// Spearman rank correlation; tied values receive their average rank.
inline double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.size() < 2) {
    throw ModelError(ErrorKind::InvalidArgument, "rank correlation needs two equal-length series (n >= 2)");
  }
  auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return v[i] < v[j]; });
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < idx.size();) {
      std::size_t j = i;
      while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
      const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
      for (std::size_t t = i; t <= j; ++t) r[idx[t]] = avg;
      i = j + 1;
    }
    return r;
  };
  const auto ra = ranks(a);
  const auto rb = ranks(b);
  const double mean = (static_cast<double>(a.size()) + 1.0) / 2.0;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (ra[i] - mean) * (rb[i] - mean);
    saa += (ra[i] - mean) * (ra[i] - mean);
    sbb += (rb[i] - mean) * (rb[i] - mean);
  }
  if (saa == 0.0 || sbb == 0.0) {
    throw ModelError(ErrorKind::InvalidArgument, "rank correlation undefined for a constant series");
  }
  return sab / std::sqrt(saa * sbb);
}

}  // namespace amdahl
