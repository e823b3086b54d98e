#include "clucmp/elementsim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "clucmp/error.hpp"
#include "clucmp/parallel.hpp"

namespace clucmp {
namespace {

void require_same_universe(const Clustering& a, const Clustering& b) {
  if (!a.same_universe(b))
    throw Error(ErrorCode::UniverseMismatch, "clusterings are defined on different element sets");
}

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

bool use_partition_shortcut(const Clustering& a, const Clustering& b, const SimilarityOptions& o) {
  return a.is_partition() && b.is_partition() && o.method != PprMethod::Numeric;
}

ElementScores make_scores(std::shared_ptr<const ElementUniverse> universe, const SimilarityOptions& o) {
  ElementScores s;
  s.scores.assign(universe->size(), 0.0);
  s.universe = std::move(universe);
  s.alpha = o.alpha;
  s.r = o.r;
  return s;
}

}  // namespace

double ElementScores::mean() const {
  if (scores.empty()) return 0.0;
  return std::accumulate(scores.begin(), scores.end(), 0.0) / static_cast<double>(scores.size());
}

double ElementScores::at(std::string_view element_id) const {
  const auto idx = universe->index_of(element_id);
  if (!idx) throw Error(ErrorCode::InvalidArgument, "unknown element '" + std::string(element_id) + "'");
  return scores[*idx];
}

ElementScores partition_element_scores(const Clustering& a, const Clustering& b) {
  require_same_universe(a, b);
  if (!a.is_partition() || !b.is_partition())
    throw Error(ErrorCode::NotAPartition, "partition shortcut needs two partitions");

  const std::size_t n = a.num_elements();
  const auto la = a.labels();
  const auto lb = b.labels();

  // Overlap |A_k ∩ B_m| for the cluster pair of every element, via one scratch
  // row of B-counts per A cluster.
  std::vector<std::size_t> overlap(n, 0);
  std::vector<std::size_t> scratch(b.num_clusters(), 0);
  for (std::size_t k = 0; k < a.num_clusters(); ++k) {
    const auto members = a.members(k);
    for (Index i : members) ++scratch[lb[i]];
    for (Index i : members) overlap[i] = scratch[lb[i]];
    for (Index i : members) scratch[lb[i]] = 0;
  }

  ElementScores out;
  out.universe = a.universe_ptr();
  out.scores.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double sa = static_cast<double>(a.cluster_size(la[i]));
    const double sb = static_cast<double>(b.cluster_size(lb[i]));
    const double both = static_cast<double>(overlap[i]);
    const double distance =
        0.5 * (both * std::abs(1.0 / sa - 1.0 / sb) + (sa - both) / sa + (sb - both) / sb);
    out.scores[i] = clamp_unit(1.0 - distance);
  }
  return out;
}

ElementScores element_scores(const AffinityModel& a, const AffinityModel& b,
                             std::shared_ptr<const ElementUniverse> universe,
                             const SimilarityOptions& options) {
  if (a.size() != b.size() || a.size() != universe->size())
    throw Error(ErrorCode::UniverseMismatch, "affinity models have different sizes");
  const double alpha = a.alpha();
  ElementScores out = make_scores(std::move(universe), options);
  out.alpha = alpha;
  const std::size_t n = a.size();

  constexpr std::size_t kBlock = 64;
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  parallel_for(
      blocks,
      [&](std::size_t blk) {
        std::vector<double> pa(n), pb(n);
        const std::size_t end = std::min(n, (blk + 1) * kBlock);
        for (std::size_t i = blk * kBlock; i < end; ++i) {
          a.fill_row(static_cast<Index>(i), pa);
          b.fill_row(static_cast<Index>(i), pb);
          double l1 = 0.0;
          for (std::size_t j = 0; j < n; ++j) l1 += std::abs(pa[j] - pb[j]);
          out.scores[i] = clamp_unit(1.0 - l1 / (2.0 * alpha));
        }
      },
      options.workers);
  return out;
}

ElementScores element_scores(const Clustering& a, const Clustering& b, const SimilarityOptions& options) {
  require_same_universe(a, b);
  if (use_partition_shortcut(a, b, options)) {
    ElementScores s = partition_element_scores(a, b);
    s.alpha = options.alpha;
    s.r = options.r;
    return s;
  }
  const AffinityModel ma(a, options.alpha, options.r, options.method, options.ppr);
  const AffinityModel mb(b, options.alpha, options.r, options.method, options.ppr);
  return element_scores(ma, mb, a.universe_ptr(), options);
}

ComparisonReport similarity(const Clustering& a, const Clustering& b, const SimilarityOptions& options) {
  ComparisonReport report;
  report.measure = "elsim";
  report.params = {{"alpha", options.alpha}, {"r", options.r}};
  report.element_scores = element_scores(a, b, options);
  report.score = report.element_scores->mean();
  return report;
}

namespace {

// Element scores for many pairs drawn from one set: affinity models are built
// once per clustering and reused, partition pairs take the shortcut.
class PairScorer {
 public:
  PairScorer(std::span<const Clustering> set, const SimilarityOptions& options)
      : set_(set), options_(options), models_(set.size()) {}

  ElementScores operator()(std::size_t x, std::size_t y) {
    const Clustering& a = set_[x];
    const Clustering& b = set_[y];
    if (use_partition_shortcut(a, b, options_)) return partition_element_scores(a, b);
    return element_scores(model(x), model(y), a.universe_ptr(), options_);
  }

 private:
  const AffinityModel& model(std::size_t k) {
    if (!models_[k]) models_[k].emplace(set_[k], options_.alpha, options_.r, options_.method, options_.ppr);
    return *models_[k];
  }

  std::span<const Clustering> set_;
  const SimilarityOptions& options_;
  std::vector<std::optional<AffinityModel>> models_;
};

}  // namespace

ElementScores agreement(const Clustering& reference, std::span<const Clustering> set,
                        const SimilarityOptions& options) {
  if (set.empty()) throw Error(ErrorCode::EmptySet, "agreement needs at least one clustering");
  for (const auto& c : set) require_same_universe(reference, c);

  std::vector<Clustering> all;
  all.reserve(set.size() + 1);
  all.push_back(reference);
  all.insert(all.end(), set.begin(), set.end());
  PairScorer scorer(all, options);

  ElementScores out = make_scores(reference.universe_ptr(), options);
  for (std::size_t j = 1; j < all.size(); ++j) {
    const auto s = scorer(0, j);
    for (std::size_t i = 0; i < out.scores.size(); ++i) out.scores[i] += s.scores[i];
  }
  const double t = static_cast<double>(set.size());
  for (double& x : out.scores) x /= t;
  return out;
}

ElementScores frustration(std::span<const Clustering> set, const SimilarityOptions& options) {
  if (set.size() < 2) throw Error(ErrorCode::TooFewClusterings, "frustration needs at least two clusterings");
  for (const auto& c : set) require_same_universe(set.front(), c);

  PairScorer scorer(set, options);
  ElementScores out = make_scores(set.front().universe_ptr(), options);
  std::size_t pairs = 0;
  for (std::size_t j = 1; j < set.size(); ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      const auto s = scorer(k, j);
      for (std::size_t i = 0; i < out.scores.size(); ++i) out.scores[i] += s.scores[i];
      ++pairs;
    }
  }
  for (double& x : out.scores) x /= static_cast<double>(pairs);
  return out;
}

std::vector<RankEntry> rank_distribution(const ElementScores& scores) {
  std::vector<std::size_t> order(scores.scores.size());
  std::iota(order.begin(), order.end(), 0);
  // Universe indices already follow element-id order, so a stable sort keeps ties by id.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return scores.scores[x] > scores.scores[y];
  });
  std::vector<RankEntry> out;
  out.reserve(order.size());
  for (std::size_t r = 0; r < order.size(); ++r)
    out.push_back({r + 1, scores.universe->id(order[r]), scores.scores[order[r]]});
  return out;
}

}  // namespace clucmp
