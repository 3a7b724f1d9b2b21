#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "amdahl/cli.hpp"

using namespace amdahl;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(AMDAHL_DATA_DIR) + "/" + name; }

// Data rows of a CSV document (comment lines dropped), split into fields.
std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    bool ok = true;
    rows.push_back(amdahl::detail::split_csv(line, ok));
  }
  return rows;
}

std::string column(const std::string& csv, const std::string& name, std::size_t row = 0) {
  const auto rows = csv_rows(csv);
  for (std::size_t i = 0; i < rows.at(0).size(); ++i) {
    if (rows[0][i] == name) return rows.at(row + 1).at(i);
  }
  ADD_FAILURE() << "no column " << name;
  return {};
}

}  // namespace

TEST(Cli, AlphaFromEfficiency) {
  const auto r = run({"alpha", "--efficiency", "0.69", "--cores", "16"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("2.995e-02"), std::string::npos) << r.out;
}

TEST(Cli, AlphaMatchesLibraryAtPrintedPrecision) {
  for (int digits : {1, 4, 10, 17}) {
    const auto r = run({"--format", "csv", "--precision", std::to_string(digits), "alpha", "--efficiency",
                        "0.742", "--cores", "10649600"});
    ASSERT_EQ(r.code, 0) << r.err;
    const double lib =
        alpha_eff_from_efficiency(Efficiency::from_value(0.742), 10649600).one_minus_alpha;
    EXPECT_EQ(column(r.out, "one_minus_alpha"), format_sci(lib, digits));
  }
}

TEST(Cli, AlphaOtherRoutes) {
  auto r = run({"--format", "csv", "alpha", "--speedup", "2", "--cores", "3"});
  EXPECT_EQ(column(r.out, "one_minus_alpha"), "2.500e-01");
  r = run({"--format", "csv", "alpha", "--e1", "0.917431192660550", "--k1", "10", "--e2",
           "0.502512562814070", "--k2", "100"});
  EXPECT_EQ(column(r.out, "method"), "two-point-slope");
  EXPECT_EQ(column(r.out, "one_minus_alpha"), "1.000e-02");
  r = run({"--format", "csv", "alpha", "--t1", "10", "--k1", "1", "--t2", "5", "--k2", "3"});
  EXPECT_EQ(column(r.out, "one_minus_alpha"), "2.500e-01");
}

TEST(Cli, SuperlinearIsModelError) {
  const auto r = run({"alpha", "--efficiency", "1.2", "--cores", "8"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("superlinear speedup outside model"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"alpha", "--bogus", "1"}).code, 1);
  EXPECT_EQ(run({"alpha", "--efficiency", "0.5"}).code, 1);
  EXPECT_EQ(run({"alpha", "--efficiency", "0.5", "--speedup", "2", "--cores", "4"}).code, 1);
  EXPECT_EQ(run({"--precision", "18", "alpha", "--efficiency", "0.5", "--cores", "4"}).code, 1);
  EXPECT_EQ(run({"saturation", "--per-proc-flops", "fast", "--one-minus-alpha", "1e-8"}).code, 1);
  const auto r = run({"frobnicate"});
  EXPECT_NE(r.err.find("alpha"), std::string::npos) << "help text lists subcommands";
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("whatif"), std::string::npos);
}

TEST(Cli, WhatIfGyoukou) {
  const auto r = run({"--format", "csv", "whatif", "--efficiency", "0.679", "--cores", "2400000",
                      "--new-cores", "19860000", "--rpeak", "229e6", "--alpha-scale", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(column(r.out, "efficiency")), 0.116, 0.003);
  EXPECT_NEAR(std::stod(column(r.out, "rmax_gflops")), 26.6e6, 0.03 * 26.6e6);
}

TEST(Cli, PerformanceSuffixes) {
  const auto a = run({"--format", "csv", "saturation", "--per-proc-flops", "11.7375", "--one-minus-alpha",
                      "3.273e-8"});
  const auto b = run({"--format", "csv", "saturation", "--per-proc-flops", "0.0117375T",
                      "--one-minus-alpha", "3.273e-8"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(column(a.out, "saturation_rmax_gflops"), column(b.out, "saturation_rmax_gflops"));
  const auto table = run({"saturation", "--per-proc-flops", "11.7375", "--one-minus-alpha", "3.273e-8"});
  EXPECT_NE(table.out.find("3.586e+02 Pflop/s"), std::string::npos) << table.out;
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> cmds{
      {"simulate", "--workload", data("workloads/realistic.json"), "--timeline"},
      {"--format", "csv", "timeline", "--input", data("top10_2017.csv"), "--select", "best-alpha"},
      {"project", "--input", data("top10_2017.csv"), "--name", "TaihuLight", "--rpeak-from", "10P",
       "--rpeak-to", "10E"},
      {"bounds", "--clock-hz", "1.45e9", "--runtime-s", "13298", "--sw-cycles", "2"},
  };
  for (const auto& c : cmds) {
    const auto a = run(c);
    const auto b = run(c);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, SimulateRealistic) {
  const auto r = run({"--format", "csv", "simulate", "--workload", data("workloads/realistic.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(column(r.out, "parallel_time"), "7.000e+00");
  EXPECT_EQ(column(r.out, "alpha_eff"), "4.500e-01");
}

TEST(Cli, SimulateBadWorkloadIsModelError) {
  EXPECT_EQ(run({"simulate", "--workload", data("missing.json")}).code, 2);
  EXPECT_EQ(run({"simulate", "--workload", data("top10_2017.csv")}).code, 2);
}

TEST(Cli, TimelineCsvRoundTrips) {
  for (const std::string sel : {"best-rmax", "best-alpha"}) {
    const auto r = run({"--format", "csv", "timeline", "--input", data("dongarra_1992.csv"), "--select", sel});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    const auto reparsed = parse_records(in);
    std::ifstream src(data("dongarra_1992.csv"));
    const auto records = parse_records(src);
    const auto by = sel == "best-rmax" ? ChampionCriterion::BestRmax : ChampionCriterion::BestAlpha;
    EXPECT_EQ(reparsed, select_champions(records, by));
  }
}

TEST(Cli, TimelineBenchmarkFilter) {
  const auto r = run({"--format", "csv", "timeline", "--input", data("top10_2017.csv"), "--select",
                      "best-alpha", "--benchmark", "HPCG"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(column(r.out, "name"), "K computer");
  EXPECT_EQ(column(r.out, "benchmark"), "HPCG");
}

TEST(Cli, MalformedInputIsModelError) {
  const auto r = run({"timeline", "--input", data("workloads/classic.json"), "--select", "best-rmax"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("missing-header"), std::string::npos) << r.err;
}

TEST(Cli, MeanEfficiency) {
  const auto r = run({"--format", "csv", "mean-efficiency", "--input", data("top25_2016_synthetic.csv"),
                      "--top", "25"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(column(r.out, "mean_efficiency")), 0.757, 1e-3);
  EXPECT_NEAR(std::stod(column(r.out, "sd_efficiency")), 0.117, 1e-3);
}

TEST(Cli, ProjectExplicitBase) {
  const auto r = run({"--format", "csv", "project", "--one-minus-alpha", "3.273e-8", "--cores", "10649600",
                      "--rpeak", "0.125E", "--rpeak-from", "0.125E", "--rpeak-to", "1E", "--points", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(column(r.out, "cores", 1), "85196800");
  const auto lib = project_curve({10649600, 0.125e9, 3.273e-8}, {0.125e9, 1e9});
  EXPECT_EQ(column(r.out, "efficiency", 1), format_sci(lib.samples[1].efficiency.value(), 4));
}

TEST(Cli, ProjectNeedsOneBase) {
  EXPECT_EQ(run({"project", "--rpeak-from", "1P", "--rpeak-to", "1E"}).code, 1);
  EXPECT_EQ(run({"project", "--input", data("top10_2017.csv"), "--name", "Nope", "--rpeak-from", "1P",
                 "--rpeak-to", "1E"})
                .code,
            2);
}

TEST(Cli, RequiredAlphaInfeasible) {
  const auto r = run({"required-alpha", "--efficiency", "0.001", "--cores", "10"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("infeasible"), std::string::npos);
}

TEST(Cli, BoundsZeroBudget) {
  const auto r = run({"bounds", "--clock-hz", "1e9", "--runtime-s", "10"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("zero-budget"), std::string::npos);
}

TEST(Cli, BoundsThroughput) {
  const auto r = run({"--format", "csv", "bounds", "--clock-hz", "1.45e9", "--runtime-s", "13298",
                      "--sw-cycles", "1e5", "--per-proc-flops", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  const double flops = std::stod(column(r.out, "max_throughput_flops"));
  EXPECT_GT(flops, 5e17);
  EXPECT_LT(flops, 2e18 * 1.0001);
}
