#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "clucmp/affinity.hpp"
#include "clucmp/clustering.hpp"

namespace clucmp {

struct SimilarityOptions {
  double alpha = kDefaultAlpha;
  double r = kDefaultR;
  PprMethod method = PprMethod::Auto;
  PprOptions ppr{};
  /// Threads used for per-element work inside one comparison.
  std::size_t workers = 1;
};

/// Per-element similarity in [0, 1], indexed like the universe.
struct ElementScores {
  std::shared_ptr<const ElementUniverse> universe;
  std::vector<double> scores;
  double alpha = kDefaultAlpha;
  double r = kDefaultR;

  [[nodiscard]] double mean() const;
  [[nodiscard]] double at(std::string_view element_id) const;
};

using ParamValue = std::variant<double, std::string>;

struct ComparisonReport {
  std::string measure;
  std::map<std::string, ParamValue> params;
  double score = 0.0;
  std::optional<ElementScores> element_scores;
};

/// S_i = 1 - (1 / 2alpha) * || p_i^A - p_i^B ||_1 for every element i.
/// Throws UniverseMismatch.
ElementScores element_scores(const Clustering& a, const Clustering& b,
                             const SimilarityOptions& options = {});

/// Same, from precomputed affinity models of two clusterings on one universe.
ElementScores element_scores(const AffinityModel& a, const AffinityModel& b,
                             std::shared_ptr<const ElementUniverse> universe,
                             const SimilarityOptions& options = {});

/// Partition shortcut: S_i depends only on the sizes a, b of the clusters
/// holding i and on their overlap n, S_i = 1 - (n|1/a - 1/b| + (a-n)/a + (b-n)/b) / 2.
/// Independent of alpha. Throws NotAPartition, UniverseMismatch.
ElementScores partition_element_scores(const Clustering& a, const Clustering& b);

/// Mean of the element scores, with the per-element map attached.
ComparisonReport similarity(const Clustering& a, const Clustering& b,
                            const SimilarityOptions& options = {});

/// Per element, the mean of S_i(reference, R_j) over the set.
/// Throws EmptySet, UniverseMismatch.
ElementScores agreement(const Clustering& reference, std::span<const Clustering> set,
                        const SimilarityOptions& options = {});

/// Per element, the mean of S_i(R_k, R_j) over all unordered pairs. High values
/// mean consistent grouping; frustrated elements are the ones with LOW values.
/// Throws TooFewClusterings, UniverseMismatch.
ElementScores frustration(std::span<const Clustering> set, const SimilarityOptions& options = {});

struct RankEntry {
  std::size_t rank;
  std::string element;
  double score;
};

/// Scores sorted descending, ranks from 1; ties keep element-id order.
std::vector<RankEntry> rank_distribution(const ElementScores& scores);

}  // namespace clucmp
