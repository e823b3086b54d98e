#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clucmp/measures.hpp"
#include "clucmp/parallel.hpp"

namespace clucmp {

/// Synthetic bias benchmarks.
///   shuffle       reference K equal clusters vs. a copy with a fraction p of labels shuffled
///   skew          reference vs. a random K-cluster partition pushed towards skewed sizes by
///                 preferential-attachment moves; samples binned by size entropy
///   clustercount  reference K (default 8) equal clusters vs. a random partition into c clusters
///   bothrandom    two independent random partitions into c clusters
enum class Scenario { Shuffle, Skew, ClusterCount, BothRandom };

std::string_view scenario_name(Scenario s);
/// Throws UnknownScenario.
Scenario parse_scenario(std::string_view name);

struct ScenarioConfig {
  Scenario scenario = Scenario::Shuffle;
  std::size_t n = 1024;
  /// Reference cluster count; unset means 32, or 8 for clustercount.
  std::optional<std::size_t> k;
  std::size_t reps = 100;
  std::uint64_t seed = 0;
  std::vector<Measure> measures{all_measures().begin(), all_measures().end()};
  /// Control-parameter values; empty selects default_grid(). Ignored by skew.
  std::vector<double> grid;
  std::size_t skew_steps = 10000;
  std::size_t skew_bins = 40;
  SimilarityOptions similarity{};
  std::size_t workers = default_worker_count();
};

/// shuffle: p = 0, 0.05, ..., 1; clustercount: 2^1..N; bothrandom: 2^3..N
/// (powers of two not exceeding N); skew: empty.
std::vector<double> default_grid(Scenario s, std::size_t n);

std::size_t reference_cluster_count(const ScenarioConfig& config);

struct ScenarioRow {
  std::string scenario;
  double param = 0.0;
  std::string measure;
  double mean = 0.0;
  double std = 0.0;  // population standard deviation
  std::size_t reps = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const ScenarioRow&, const ScenarioRow&) = default;
};

struct ScenarioTable {
  std::vector<ScenarioRow> rows;

  /// Row for (param, measure), if present. Params are matched exactly.
  [[nodiscard]] const ScenarioRow* find(double param, std::string_view measure) const;
  /// Rows of one measure in ascending param order.
  [[nodiscard]] std::vector<ScenarioRow> series(std::string_view measure) const;

  friend bool operator==(const ScenarioTable&, const ScenarioTable&) = default;
};

/// Runs every repetition (in parallel across `workers`) and aggregates mean
/// and std per grid point and measure. Repetition r of grid point g uses the
/// generator seeded with derive_seed(seed, g * reps + r) (skew: derive_seed(seed, r)),
/// so output does not depend on scheduling. Rows are sorted by (scenario, param, measure).
ScenarioTable run_scenario(const ScenarioConfig& config);

/// Columns scenario,param,measure,mean,std,reps,seed; '.' decimal separator,
/// shortest round-trip numbers.
std::string scenario_to_csv(const ScenarioTable& table);
/// Throws ParseError.
ScenarioTable parse_scenario_csv(std::string_view text);

struct ZoomConfig {
  std::size_t depth = 4;
  std::size_t leaf_size = 4;
  std::vector<double> r_grid{-10, -8, -6, -4, -2, 0, 2, 4, 6, 8, 10};
  double alpha = kDefaultAlpha;
};

struct ZoomRow {
  double r = 0.0;
  std::size_t level = 0;  // depth of the slice, 0 = root
  double similarity = 0.0;
};

/// Compares a complete binary hierarchy against each of its level slices for
/// every r. Returns |r_grid| * (depth + 1) rows, r-major.
std::vector<ZoomRow> run_zoom(const ZoomConfig& config);
std::string zoom_to_csv(const std::vector<ZoomRow>& rows);

/// Spearman rank correlation with average ranks for ties.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace clucmp
