#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "amdahl/projection.hpp"
#include "oracles.hpp"

using namespace amdahl;

namespace {

// TaihuLight in Gflop/s.
const BaseMachine kTaihu{10649600, 0.125e9, 3.273e-8};

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const ModelError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ModelError thrown";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(ProjectCurve, TaihuLightAtBasePeak) {
  const auto c = project_curve(kTaihu, {0.125e9});
  ASSERT_EQ(c.samples.size(), 1u);
  EXPECT_EQ(c.samples[0].cores, kTaihu.cores);
  EXPECT_LT(rel_err(c.samples[0].rmax, 0.09275e9), 0.005);
}

TEST(ProjectCurve, TaihuLightAtOneExa) {
  const auto c = project_curve(kTaihu, {1e9});
  EXPECT_EQ(c.samples[0].cores, 85196800);
  EXPECT_LT(rel_err(c.samples[0].efficiency.value(), 0.265), 0.015);
}

TEST(ProjectCurve, PerfectParallelization) {
  const auto c = project_curve({1000, 1e4, 0.0}, log_grid(1.0, 1e9, 50));
  for (const auto& s : c.samples) {
    EXPECT_EQ(s.efficiency.value(), 1.0);
    EXPECT_EQ(s.rmax, s.rpeak);
  }
}

TEST(ProjectCurve, SelfConsistentAtBase) {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> exponent(-9.0, -1.0);
  std::uniform_int_distribution<Cores> cores(2, 20000000);
  for (int i = 0; i < 1000; ++i) {
    const BaseMachine base{cores(rng), 1e6, std::pow(10.0, exponent(rng))};
    const auto c = project_curve(base, {base.rpeak});
    EXPECT_EQ(c.samples[0].cores, base.cores);
    EXPECT_LT(rel_err(c.samples[0].efficiency.value(), oracle::efficiency(base.one_minus_alpha, base.cores)),
              1e-12);
  }
}

TEST(ProjectCurve, CoresRoundToNearestAtLeastOne) {
  const BaseMachine base{100, 1000.0, 1e-3};
  EXPECT_EQ(scaled_cores(base, 1.0), 1);
  EXPECT_EQ(scaled_cores(base, 14.9), 1);
  EXPECT_EQ(scaled_cores(base, 15.1), 2);
  EXPECT_EQ(scaled_cores(base, 2000.0), 200);
}

TEST(ProjectCurve, MonotoneAndBoundedBySaturation) {
  for (double oma : {1e-2, 3.273e-8, 2.5e-5}) {
    const BaseMachine base{10649600, 0.125e9, oma};
    const double per_core = base.rpeak / static_cast<double>(base.cores);
    const double sat = saturation_rmax(per_core, oma);
    const auto c = project_curve(base, log_grid(1e3, 1e14, 400));
    double prev_rmax = 0.0;
    double prev_e = 2.0;
    for (const auto& s : c.samples) {
      EXPECT_EQ(s.rmax, s.efficiency.value() * s.rpeak);
      EXPECT_GE(s.rmax, prev_rmax);
      EXPECT_LE(s.efficiency.value(), prev_e);
      EXPECT_LE(s.rmax, sat * (1 + 1e-12));
      if (static_cast<double>(s.cores) * oma > 100.0) {
        EXPECT_LT(rel_err(s.rmax, sat), 0.01) << oma << " " << s.cores;
      }
      prev_rmax = s.rmax;
      prev_e = s.efficiency.value();
    }
  }
}

TEST(ProjectCurve, SmallerSequentialFractionNeverLoses) {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> exponent(-9.0, -1.0);
  const auto grid = log_grid(1e3, 1e10, 120);
  for (int i = 0; i < 200; ++i) {
    double a = std::pow(10.0, exponent(rng));
    double b = std::pow(10.0, exponent(rng));
    if (a > b) std::swap(a, b);
    const auto good = project_curve({100000, 1e6, a}, grid);
    const auto bad = project_curve({100000, 1e6, b}, grid);
    for (std::size_t j = 0; j < grid.size(); ++j) EXPECT_GE(good.samples[j].rmax, bad.samples[j].rmax);
  }
}

TEST(ProjectCurve, InvalidGrid) {
  EXPECT_EQ(kind_of([] { project_curve(kTaihu, {1e9, 0.0}); }), ErrorKind::InvalidGrid);
  EXPECT_EQ(kind_of([] { project_curve(kTaihu, {-5.0}); }), ErrorKind::InvalidGrid);
  EXPECT_EQ(kind_of([] { log_grid(0.0, 1.0, 5); }), ErrorKind::InvalidGrid);
}

TEST(LogGrid, EndpointsAndSpacing) {
  const auto g = log_grid(1e6, 1e9, 4);
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g.front(), 1e6);
  EXPECT_EQ(g.back(), 1e9);
  EXPECT_NEAR(g[1], 1e7, 1e-3);
  EXPECT_NEAR(g[2], 1e8, 1e-2);
}

TEST(Saturation, TaihuLight) {
  const double sat = saturation_rmax(0.125e9 / 10649600.0, 3.273e-8);
  EXPECT_NEAR(sat / 1e9, 0.359, 0.001);
}

TEST(Saturation, FullySequential) {
  EXPECT_EQ(saturation_rmax(42.0, 1.0), 42.0);
  EXPECT_EQ(kind_of([] { saturation_rmax(42.0, 0.0); }), ErrorKind::Unbounded);
}

TEST(WhatIf, GyoukouFactorOne) {
  ScalingScenario s;
  s.base_one_minus_alpha = alpha_eff_from_efficiency(Efficiency::from_value(0.679), 2400000).one_minus_alpha;
  s.base_cores = 2400000;
  s.target_cores = 19860000;
  s.target_rpeak = 229e6;
  EXPECT_NEAR(s.base_one_minus_alpha, 1.970e-7, 0.001e-7);
  const auto r = whatif(s);
  EXPECT_NEAR(r.efficiency.value(), 0.204, 0.001);
  EXPECT_LT(rel_err(r.rmax, 46.7e6), 0.005);
}

TEST(WhatIf, GyoukouFactorTwo) {
  ScalingScenario s;
  s.base_one_minus_alpha = alpha_eff_from_efficiency(Efficiency::from_value(0.679), 2400000).one_minus_alpha;
  s.base_cores = 2400000;
  s.alpha_scale_factor = 2.0;
  s.target_cores = 19860000;
  s.target_rpeak = 229e6;
  const auto r = whatif(s);
  EXPECT_NEAR(r.efficiency.value(), 0.116, 0.003);
  EXPECT_LT(rel_err(r.rmax, 26.6e6), 0.03);
  EXPECT_DOUBLE_EQ(r.one_minus_alpha, 2.0 * s.base_one_minus_alpha);
}

TEST(WhatIf, GyoukouHpcg) {
  ScalingScenario s;
  s.base_one_minus_alpha = 3e-5;
  s.base_cores = 2400000;
  s.target_cores = 19860000;
  s.target_rpeak = 229e6;
  const auto r = whatif(s);
  EXPECT_NEAR(r.efficiency.value(), 0.00168, 0.00002);
  EXPECT_LT(rel_err(r.rmax, 0.39e6), 0.03);
}

TEST(WhatIf, FactorOneAtBaseReproducesBase) {
  std::mt19937 rng(12);
  std::uniform_real_distribution<double> exponent(-9.0, 0.0);
  std::uniform_int_distribution<Cores> cores(1, 10000000);
  for (int i = 0; i < 500; ++i) {
    ScalingScenario s;
    s.base_one_minus_alpha = std::pow(10.0, exponent(rng));
    s.base_cores = cores(rng);
    s.base_rpeak = 1e5;
    s.target_cores = s.base_cores;
    const auto r = whatif(s);
    const auto e = efficiency_from_alpha(s.base_one_minus_alpha, s.base_cores);
    EXPECT_EQ(r.efficiency.value(), e.value());
    EXPECT_EQ(r.rpeak, 1e5);
  }
}

TEST(WhatIf, DerivesMissingTarget) {
  ScalingScenario s;
  s.base_one_minus_alpha = 1e-6;
  s.base_cores = 1000;
  s.base_rpeak = 2000.0;
  s.target_rpeak = 8000.0;
  EXPECT_EQ(whatif(s).cores, 4000);
  s.target_rpeak.reset();
  s.target_cores = 500;
  EXPECT_EQ(whatif(s).rpeak, 1000.0);
}

TEST(WhatIf, Errors) {
  ScalingScenario s;
  s.base_one_minus_alpha = 0.4;
  s.base_cores = 10;
  s.alpha_scale_factor = 3.0;
  s.target_cores = 20;
  s.target_rpeak = 1.0;
  EXPECT_EQ(kind_of([&] { whatif(s); }), ErrorKind::AlphaOverflow);
  s.alpha_scale_factor = 1.0;
  s.target_rpeak.reset();
  EXPECT_EQ(kind_of([&] { whatif(s); }), ErrorKind::InvalidArgument);  // no base rpeak
  s.target_cores.reset();
  EXPECT_EQ(kind_of([&] { whatif(s); }), ErrorKind::InvalidArgument);  // no target
}

TEST(RequiredAlpha, Examples) {
  EXPECT_LT(rel_err(required_one_minus_alpha(Efficiency::from_value(0.742), 85196800), 4.09e-9), 0.01);
  EXPECT_EQ(required_one_minus_alpha(Efficiency::from_value(1.0), 123456), 0.0);
}

TEST(RequiredAlpha, InverseOfEfficiency) {
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> exponent(-9.0, 0.0);
  std::uniform_int_distribution<Cores> cores(2, 100000000);
  for (int i = 0; i < 20000; ++i) {
    const double oma = std::pow(10.0, exponent(rng));
    const Cores k = cores(rng);
    const double back = required_one_minus_alpha(efficiency_from_alpha(oma, k), k);
    ASSERT_LT(rel_err(back, oma), 1e-12) << oma << " " << k;
    // And the other way round, from a measured efficiency.
    const auto e = Efficiency::from_value(std::max(1.0 / static_cast<double>(k), oracle::efficiency(oma, k)));
    const double again = efficiency_from_alpha(required_one_minus_alpha(e, k), k).value();
    ASSERT_LT(rel_err(again, e.value()), 1e-12);
  }
}

TEST(RequiredAlpha, Infeasible) {
  EXPECT_EQ(kind_of([] { required_one_minus_alpha(Efficiency::from_value(0.001), 10); }),
            ErrorKind::Infeasible);
  EXPECT_EQ(kind_of([] { required_one_minus_alpha(Efficiency::from_value(0.5), 1); }),
            ErrorKind::DegenerateK);
}

TEST(Bounds, TwoCycleBudget) {
  ContributionBudget b;
  b.clock_hz = 1.45e9;
  b.total_time_s = 13298;
  b.sw_cycles = 2;
  const auto r = bounds(b);
  EXPECT_NEAR(r.total_cycles, 1.928e13, 0.001e13);
  EXPECT_NEAR(r.one_minus_alpha_limit, 1.04e-13, 0.01e-13);
  EXPECT_FALSE(r.max_throughput_flops);
}

TEST(Bounds, Propagation) {
  EXPECT_NEAR(propagation_cycles(100.0, 1e9), 667.1, 0.1);
  ContributionBudget b;
  b.clock_hz = 1e9;
  b.total_time_s = 1e4;
  b.sw_cycles = 1e4;
  b.physical_size_m = 100.0;
  const auto r = bounds(b);
  EXPECT_NEAR(r.propagation_cycles, 667.1, 0.1);
  EXPECT_GT(r.one_minus_alpha_limit, 1e-10);
  EXPECT_LT(r.one_minus_alpha_limit, 1e-8);
}

TEST(Bounds, DreamLimit) {
  ContributionBudget b;
  b.clock_hz = 2e9;
  b.total_time_s = 1e4;
  b.hw_cycles = 4e4;
  b.os_cycles = 5e4;
  b.sw_cycles = 1e4;
  b.per_processor_flops = 1e10;
  const auto r = bounds(b);
  EXPECT_NEAR(r.one_minus_alpha_limit, 5e-9, 1e-20);
  EXPECT_NEAR(r.max_speedup, 2e8, 1e-3);
  ASSERT_TRUE(r.max_throughput_flops);
  EXPECT_NEAR(*r.max_throughput_flops, 2e18, 1e6);
}

TEST(Bounds, SharesSumToOne) {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> cyc(0.0, 1e6);
  for (int i = 0; i < 1000; ++i) {
    ContributionBudget b;
    b.clock_hz = 1e9;
    b.total_time_s = 1e4;
    b.hw_cycles = cyc(rng);
    b.os_cycles = cyc(rng);
    b.sw_cycles = cyc(rng);
    if (i % 2) b.physical_size_m = cyc(rng) / 1e4;
    const auto r = bounds(b);
    double sum = 0.0;
    for (const auto& c : r.breakdown) sum += c.share;
    EXPECT_NEAR(sum, 1.0, 1e-12);
    EXPECT_EQ(r.breakdown.size(), 4u);
  }
}

TEST(Bounds, Errors) {
  ContributionBudget b;
  b.clock_hz = 1e9;
  b.total_time_s = 10;
  EXPECT_EQ(kind_of([&] { bounds(b); }), ErrorKind::ZeroBudget);
  b.hw_cycles = -1;
  EXPECT_EQ(kind_of([&] { bounds(b); }), ErrorKind::InvalidArgument);
  b.hw_cycles = 1;
  b.clock_hz = 0;
  EXPECT_EQ(kind_of([&] { bounds(b); }), ErrorKind::InvalidArgument);
}
