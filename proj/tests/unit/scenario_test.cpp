#include "clucmp/scenario.hpp"

#include <cmath>
#include <tuple>

#include <gtest/gtest.h>

#include "clucmp/error.hpp"

namespace clucmp {
namespace {

ScenarioConfig small(Scenario s) {
  ScenarioConfig c;
  c.scenario = s;
  c.n = 64;
  c.k = 8;
  c.reps = 5;
  c.seed = 17;
  c.skew_steps = 200;
  c.skew_bins = 10;
  c.workers = 2;
  return c;
}

TEST(Grids, Defaults) {
  const auto shuffle = default_grid(Scenario::Shuffle, 1024);
  ASSERT_EQ(shuffle.size(), 21u);
  EXPECT_EQ(shuffle.front(), 0.0);
  EXPECT_EQ(shuffle.back(), 1.0);
  EXPECT_EQ(default_grid(Scenario::ClusterCount, 1024),
            (std::vector<double>{2, 4, 8, 16, 32, 64, 128, 256, 512, 1024}));
  EXPECT_EQ(default_grid(Scenario::BothRandom, 1024), (std::vector<double>{8, 16, 32, 64, 128, 256, 512, 1024}));
  EXPECT_TRUE(default_grid(Scenario::Skew, 1024).empty());
  ScenarioConfig cc;
  cc.scenario = Scenario::ClusterCount;
  EXPECT_EQ(reference_cluster_count(cc), 8u);
  cc.scenario = Scenario::Shuffle;
  EXPECT_EQ(reference_cluster_count(cc), 32u);
}

TEST(Scenario, ShuffleAtZeroIsPerfect) {
  auto cfg = small(Scenario::Shuffle);
  cfg.grid = {0.0};
  const auto t = run_scenario(cfg);
  EXPECT_EQ(t.rows.size(), all_measures().size());
  for (const auto& row : t.rows) {
    EXPECT_NEAR(row.mean, row.measure == "vi" ? 0.0 : 1.0, 1e-12) << row.measure;
    EXPECT_NEAR(row.std, 0.0, 1e-12);
    EXPECT_EQ(row.reps, 5u);
    EXPECT_EQ(row.seed, 17u);
  }
}

TEST(Scenario, RowsSortedAndWellFormed) {
  for (Scenario s : {Scenario::Shuffle, Scenario::Skew, Scenario::ClusterCount, Scenario::BothRandom}) {
    auto cfg = small(s);
    if (s == Scenario::ClusterCount || s == Scenario::BothRandom) cfg.grid = {2, 8, 64};
    if (s == Scenario::Shuffle) cfg.grid = {0.0, 0.5, 1.0};
    const auto t = run_scenario(cfg);
    ASSERT_FALSE(t.rows.empty());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      EXPECT_GE(t.rows[i].std, 0.0);
      EXPECT_GE(t.rows[i].reps, 1u);
      EXPECT_EQ(t.rows[i].scenario, scenario_name(s));
      if (i > 0) {
        const auto& p = t.rows[i - 1];
        const auto& q = t.rows[i];
        EXPECT_TRUE(std::tie(p.scenario, p.param, p.measure) < std::tie(q.scenario, q.param, q.measure));
      }
    }
  }
}

TEST(Scenario, DeterministicAcrossWorkerCounts) {
  for (Scenario s : {Scenario::Shuffle, Scenario::Skew, Scenario::BothRandom}) {
    auto one = small(s);
    one.workers = 1;
    if (s == Scenario::BothRandom) one.grid = {8, 16};
    auto three = one;
    three.workers = 3;
    EXPECT_EQ(scenario_to_csv(run_scenario(one)), scenario_to_csv(run_scenario(three)));
  }
}

TEST(Scenario, SeedChangesOutput) {
  auto a = small(Scenario::Shuffle);
  a.grid = {0.5};
  auto b = a;
  b.seed = 18;
  EXPECT_NE(run_scenario(a).rows[0].mean, run_scenario(b).rows[0].mean);
}

TEST(Scenario, SkewBinsCoverSamples) {
  auto cfg = small(Scenario::Skew);
  cfg.measures = {Measure::ElSim};
  const auto t = run_scenario(cfg);
  std::size_t samples = 0;
  for (const auto& row : t.rows) samples += row.reps;
  EXPECT_EQ(samples, cfg.reps * cfg.skew_steps);
  EXPECT_LE(t.rows.size(), cfg.skew_bins);
}

TEST(Scenario, Errors) {
  EXPECT_THROW((void)parse_scenario("nope"), Error);
  auto cfg = small(Scenario::ClusterCount);
  cfg.grid = {3.5};
  EXPECT_THROW((void)run_scenario(cfg), Error);
  cfg.grid = {2};
  cfg.reps = 0;
  EXPECT_THROW((void)run_scenario(cfg), Error);
}

TEST(Csv, RoundTrip) {
  auto cfg = small(Scenario::Shuffle);
  cfg.grid = {0.0, 0.35, 1.0};
  const auto t = run_scenario(cfg);
  const auto csv = scenario_to_csv(t);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "scenario,param,measure,mean,std,reps,seed");
  const auto back = parse_scenario_csv(csv);
  EXPECT_EQ(back, t);
  EXPECT_EQ(scenario_to_csv(back), csv);
  EXPECT_THROW((void)parse_scenario_csv("a,b\n"), Error);
  EXPECT_THROW((void)parse_scenario_csv("scenario,param,measure,mean,std,reps,seed\nx,1,y\n"), Error);
}

TEST(Zoom, ShapeAndRange) {
  ZoomConfig cfg;
  cfg.r_grid = {-10, 0, 10};
  const auto rows = run_zoom(cfg);
  ASSERT_EQ(rows.size(), 3u * 5u);
  for (const auto& row : rows) {
    EXPECT_GE(row.similarity, 0.0);
    EXPECT_LE(row.similarity, 1.0);
  }
  EXPECT_EQ(rows[0].r, -10.0);
  EXPECT_EQ(rows[4].level, 4u);
  const auto csv = zoom_to_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "r,level,similarity");
  cfg.depth = 1;
  EXPECT_THROW((void)run_zoom(cfg), Error);
}

TEST(Spearman, Basics) {
  EXPECT_NEAR(spearman({1, 2, 3, 4}, {10, 20, 30, 40}), 1.0, 1e-15);
  EXPECT_NEAR(spearman({1, 2, 3, 4}, {4, 3, 2, 1}), -1.0, 1e-15);
  EXPECT_NEAR(spearman({1, 2, 3}, {1, 1, 2}), std::sqrt(0.75), 1e-12);
  EXPECT_THROW((void)spearman({1}, {1}), Error);
}

}  // namespace
}  // namespace clucmp
