#include "clucmp/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>

#include "clucmp/error.hpp"
#include "clucmp/io.hpp"
#include "clucmp/synthgen.hpp"

namespace clucmp {
namespace {

// Running count / mean / sum of squared deviations, mergeable in a fixed order.
struct Moments {
  std::size_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double total = static_cast<double>(count + o.count);
    const double delta = o.mean - mean;
    mean += delta * static_cast<double>(o.count) / total;
    m2 += o.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(o.count) / total;
    count += o.count;
  }

  [[nodiscard]] double stddev() const {
    return count == 0 ? 0.0 : std::sqrt(std::max(0.0, m2 / static_cast<double>(count)));
  }
};

std::size_t as_count(double v, std::size_t n) {
  if (!(v >= 1.0) || v > static_cast<double>(n) || std::floor(v) != v)
    throw Error(ErrorCode::InvalidArgument, "cluster count grid values must be integers in [1, N]");
  return static_cast<std::size_t>(v);
}

void sort_rows(std::vector<ScenarioRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const ScenarioRow& a, const ScenarioRow& b) {
    return std::tie(a.scenario, a.param, a.measure) < std::tie(b.scenario, b.param, b.measure);
  });
}

ScenarioTable run_grid(const ScenarioConfig& cfg) {
  const auto grid = cfg.grid.empty() ? default_grid(cfg.scenario, cfg.n) : cfg.grid;
  const std::size_t k = reference_cluster_count(cfg);
  const std::size_t m = cfg.measures.size();
  const std::size_t reps = cfg.reps;

  std::optional<Clustering> reference;
  if (cfg.scenario != Scenario::BothRandom) reference = equal_partition(cfg.n, k);
  if (cfg.scenario == Scenario::Shuffle)
    for (double p : grid)
      if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidArgument, "shuffle fractions must lie in [0, 1]");
  if (cfg.scenario != Scenario::Shuffle)
    for (double c : grid) as_count(c, cfg.n);

  std::vector<double> values(grid.size() * reps * m);
  parallel_for(
      grid.size() * reps,
      [&](std::size_t task) {
        const std::size_t g = task / reps;
        Rng rng(derive_seed(cfg.seed, task));
        std::vector<double> scores;
        switch (cfg.scenario) {
          case Scenario::Shuffle: {
            const Clustering b = shuffle_memberships(*reference, grid[g], rng);
            scores = evaluate_many(cfg.measures, *reference, b, cfg.similarity);
            break;
          }
          case Scenario::ClusterCount: {
            const Clustering b = random_partition(cfg.n, as_count(grid[g], cfg.n), rng);
            scores = evaluate_many(cfg.measures, *reference, b, cfg.similarity);
            break;
          }
          case Scenario::BothRandom: {
            const std::size_t c = as_count(grid[g], cfg.n);
            const Clustering a = random_partition(cfg.n, c, rng);
            const Clustering b = random_partition(cfg.n, c, rng);
            scores = evaluate_many(cfg.measures, a, b, cfg.similarity);
            break;
          }
          case Scenario::Skew: break;
        }
        std::copy(scores.begin(), scores.end(), values.begin() + static_cast<std::ptrdiff_t>(task * m));
      },
      cfg.workers);

  ScenarioTable table;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    for (std::size_t j = 0; j < m; ++j) {
      Moments acc;
      for (std::size_t r = 0; r < reps; ++r) acc.add(values[(g * reps + r) * m + j]);
      table.rows.push_back({std::string(scenario_name(cfg.scenario)), grid[g],
                            std::string(measure_name(cfg.measures[j])), acc.mean, acc.stddev(), reps,
                            cfg.seed});
    }
  }
  sort_rows(table.rows);
  return table;
}

ScenarioTable run_skew(const ScenarioConfig& cfg) {
  const std::size_t k = reference_cluster_count(cfg);
  const std::size_t m = cfg.measures.size();
  const std::size_t bins = cfg.skew_bins;
  if (bins == 0) throw Error(ErrorCode::InvalidArgument, "skew needs at least one bin");
  const Clustering reference = equal_partition(cfg.n, k);

  auto start_of = [&](Rng& rng) { return random_partition(cfg.n, k, rng); };

  // Pass 1: entropy range over every sample of every repetition.
  std::vector<double> lo(cfg.reps, std::numeric_limits<double>::infinity());
  std::vector<double> hi(cfg.reps, -std::numeric_limits<double>::infinity());
  parallel_for(
      cfg.reps,
      [&](std::size_t r) {
        Rng rng(derive_seed(cfg.seed, r));
        const Clustering start = start_of(rng);
        pa_skew_walk(start, cfg.skew_steps, rng,
                     [&](std::size_t step, std::span<const Index> labels, std::span<const std::size_t> sizes) {
                       if (step == 0) return;
                       const double h = size_entropy(sizes, labels.size());
                       lo[r] = std::min(lo[r], h);
                       hi[r] = std::max(hi[r], h);
                     });
      },
      cfg.workers);
  const double h_min = *std::min_element(lo.begin(), lo.end());
  const double h_max = *std::max_element(hi.begin(), hi.end());
  const double width = (h_max - h_min) / static_cast<double>(bins);

  auto bin_of = [&](double h) -> std::size_t {
    if (width <= 0.0) return 0;
    const auto b = static_cast<std::size_t>((h - h_min) / width);
    return std::min(b, bins - 1);
  };

  // Pass 2: replay each walk with the same seed and score every sample.
  std::vector<Moments> per_rep(cfg.reps * bins * m);
  parallel_for(
      cfg.reps,
      [&](std::size_t r) {
        Rng rng(derive_seed(cfg.seed, r));
        const Clustering start = start_of(rng);
        std::vector<std::string> ids;
        for (std::size_t c = 0; c < start.num_clusters(); ++c) ids.push_back(start.cluster_id(c));
        Moments* acc = per_rep.data() + r * bins * m;
        pa_skew_walk(start, cfg.skew_steps, rng,
                     [&](std::size_t step, std::span<const Index> labels, std::span<const std::size_t> sizes) {
                       if (step == 0) return;
                       std::vector<std::vector<Index>> members(sizes.size());
                       for (std::size_t i = 0; i < labels.size(); ++i)
                         members[labels[i]].push_back(static_cast<Index>(i));
                       const Clustering b(start.universe_ptr(), ids, std::move(members));
                       const auto scores = evaluate_many(cfg.measures, reference, b, cfg.similarity);
                       const std::size_t bin = bin_of(size_entropy(sizes, labels.size()));
                       for (std::size_t j = 0; j < m; ++j) acc[bin * m + j].add(scores[j]);
                     });
      },
      cfg.workers);

  ScenarioTable table;
  for (std::size_t b = 0; b < bins; ++b) {
    for (std::size_t j = 0; j < m; ++j) {
      Moments total;
      for (std::size_t r = 0; r < cfg.reps; ++r) total.merge(per_rep[(r * bins + b) * m + j]);
      if (total.count == 0) continue;
      const double center = h_min + (static_cast<double>(b) + 0.5) * width;
      table.rows.push_back({std::string(scenario_name(cfg.scenario)), center,
                            std::string(measure_name(cfg.measures[j])), total.mean, total.stddev(),
                            total.count, cfg.seed});
    }
  }
  sort_rows(table.rows);
  return table;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

template <typename T>
T parse_number(std::string_view s) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw Error(ErrorCode::ParseError, "bad number '" + std::string(s) + "'");
  return value;
}

std::vector<double> average_ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

std::string_view scenario_name(Scenario s) {
  switch (s) {
    case Scenario::Shuffle: return "shuffle";
    case Scenario::Skew: return "skew";
    case Scenario::ClusterCount: return "clustercount";
    case Scenario::BothRandom: return "bothrandom";
  }
  return "unknown";
}

Scenario parse_scenario(std::string_view name) {
  for (Scenario s : {Scenario::Shuffle, Scenario::Skew, Scenario::ClusterCount, Scenario::BothRandom})
    if (scenario_name(s) == name) return s;
  throw Error(ErrorCode::UnknownScenario, "unknown scenario '" + std::string(name) + "'");
}

std::vector<double> default_grid(Scenario s, std::size_t n) {
  std::vector<double> grid;
  switch (s) {
    case Scenario::Shuffle:
      for (int i = 0; i <= 20; ++i) grid.push_back(i / 20.0);
      break;
    case Scenario::ClusterCount:
      for (std::size_t c = 2; c <= n; c *= 2) grid.push_back(static_cast<double>(c));
      break;
    case Scenario::BothRandom:
      for (std::size_t c = 8; c <= n; c *= 2) grid.push_back(static_cast<double>(c));
      break;
    case Scenario::Skew: break;
  }
  return grid;
}

std::size_t reference_cluster_count(const ScenarioConfig& config) {
  if (config.k) return *config.k;
  return config.scenario == Scenario::ClusterCount ? 8 : 32;
}

ScenarioTable run_scenario(const ScenarioConfig& config) {
  if (config.reps == 0) throw Error(ErrorCode::InvalidArgument, "reps must be at least 1");
  if (config.measures.empty()) throw Error(ErrorCode::UnknownMeasure, "no measures requested");
  return config.scenario == Scenario::Skew ? run_skew(config) : run_grid(config);
}

const ScenarioRow* ScenarioTable::find(double param, std::string_view measure) const {
  for (const auto& row : rows)
    if (row.param == param && row.measure == measure) return &row;
  return nullptr;
}

std::vector<ScenarioRow> ScenarioTable::series(std::string_view measure) const {
  std::vector<ScenarioRow> out;
  for (const auto& row : rows)
    if (row.measure == measure) out.push_back(row);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.param < b.param; });
  return out;
}

std::string scenario_to_csv(const ScenarioTable& table) {
  std::string out = "scenario,param,measure,mean,std,reps,seed\n";
  for (const auto& r : table.rows) {
    out += r.scenario;
    out += ',';
    out += format_double(r.param);
    out += ',';
    out += r.measure;
    out += ',';
    out += format_double(r.mean);
    out += ',';
    out += format_double(r.std);
    out += ',';
    out += std::to_string(r.reps);
    out += ',';
    out += std::to_string(r.seed);
    out += '\n';
  }
  return out;
}

ScenarioTable parse_scenario_csv(std::string_view text) {
  auto lines = split(text, '\n');
  if (lines.empty() || lines.front() != "scenario,param,measure,mean,std,reps,seed")
    throw Error(ErrorCode::ParseError, "missing or unexpected CSV header");
  ScenarioTable table;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto f = split(lines[i], ',');
    if (f.size() != 7) throw Error(ErrorCode::ParseError, "expected 7 fields on line " + std::to_string(i + 1));
    table.rows.push_back({std::string(f[0]), parse_number<double>(f[1]), std::string(f[2]),
                          parse_number<double>(f[3]), parse_number<double>(f[4]),
                          parse_number<std::size_t>(f[5]), parse_number<std::uint64_t>(f[6])});
  }
  return table;
}

std::vector<ZoomRow> run_zoom(const ZoomConfig& config) {
  if (config.depth < 2) throw Error(ErrorCode::InvalidArgument, "zoom needs a hierarchy depth of at least 2");
  const Clustering tree = binary_hierarchy(config.depth, config.leaf_size);
  std::vector<Clustering> slices;
  std::vector<AffinityModel> slice_models;
  for (std::size_t d = 0; d <= config.depth; ++d) {
    slices.push_back(level_slice(tree, d));
    slice_models.emplace_back(slices.back(), config.alpha);
  }

  std::vector<ZoomRow> rows;
  SimilarityOptions options;
  options.alpha = config.alpha;
  for (double r : config.r_grid) {
    options.r = r;
    const AffinityModel tree_model(tree, config.alpha, r);
    for (std::size_t d = 0; d <= config.depth; ++d) {
      const auto scores = element_scores(tree_model, slice_models[d], tree.universe_ptr(), options);
      rows.push_back({r, d, scores.mean()});
    }
  }
  return rows;
}

std::string zoom_to_csv(const std::vector<ZoomRow>& rows) {
  std::string out = "r,level,similarity\n";
  for (const auto& row : rows)
    out += format_double(row.r) + ',' + std::to_string(row.level) + ',' + format_double(row.similarity) + '\n';
  return out;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "spearman needs two equally long series of length >= 2");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / static_cast<double>(rx.size());
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / static_cast<double>(ry.size());
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace clucmp
