#pragma once

// Random clusterings for property tests.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "clucmp/clustering.hpp"
#include "clucmp/synthgen.hpp"

namespace clucmp::testing {

inline std::size_t uniform_in(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng.below(hi - lo + 1));
}

/// Partition with k non-empty clusters of arbitrary sizes.
inline std::vector<Index> random_labels(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<Index> labels(n);
  for (std::size_t i = 0; i < n; ++i)
    labels[i] = static_cast<Index>(i < k ? i : rng.below(k));
  rng.shuffle(std::span<Index>(labels));
  return labels;
}

inline Clustering random_flat_partition(std::size_t n, Rng& rng) {
  const std::size_t k = uniform_in(rng, 1, n);
  return Clustering::from_labels(make_numbered_universe(n), random_labels(n, k, rng));
}

inline Clustering random_flat_partition(const std::shared_ptr<const ElementUniverse>& u,
                                        std::size_t k, Rng& rng) {
  return Clustering::from_labels(u, random_labels(u->size(), k, rng));
}

/// A partition plus a handful of extra memberships, so some elements sit in
/// two or more clusters.
inline Clustering random_overlapping(std::size_t n, Rng& rng) {
  const std::size_t k = uniform_in(rng, 1, std::max<std::size_t>(1, n / 2));
  const auto labels = random_labels(n, k, rng);
  std::vector<std::vector<Index>> members(k);
  for (std::size_t i = 0; i < n; ++i) members[labels[i]].push_back(static_cast<Index>(i));
  const std::size_t extra = uniform_in(rng, 1, n);
  for (std::size_t e = 0; e < extra; ++e)
    members[rng.below(k)].push_back(static_cast<Index>(rng.below(n)));
  std::vector<std::string> ids;
  for (std::size_t c = 0; c < k; ++c) ids.push_back("o" + std::to_string(c));
  return Clustering(make_numbered_universe(n), std::move(ids), std::move(members));
}

/// Leaf partition merged upwards in random groups until a single root remains.
/// Depth varies across branches, so levels are not all multiples of one step.
inline Clustering random_hierarchy(std::size_t n, Rng& rng) {
  const std::size_t k = uniform_in(rng, 1, std::max<std::size_t>(1, n / 2));
  const auto labels = random_labels(n, k, rng);
  std::vector<std::vector<Index>> members(k);
  for (std::size_t i = 0; i < n; ++i) members[labels[i]].push_back(static_cast<Index>(i));

  std::vector<HierarchyDAG::Edge> edges;
  std::vector<Index> frontier(k);
  std::iota(frontier.begin(), frontier.end(), Index{0});
  while (frontier.size() > 1) {
    rng.shuffle(std::span<Index>(frontier));
    const std::size_t group = std::min(frontier.size(), uniform_in(rng, 2, 3));
    std::vector<Index> merged;
    const auto parent = static_cast<Index>(members.size());
    for (std::size_t g = 0; g < group; ++g) {
      const Index child = frontier.back();
      frontier.pop_back();
      edges.emplace_back(parent, child);
      merged.insert(merged.end(), members[child].begin(), members[child].end());
    }
    members.push_back(std::move(merged));
    frontier.push_back(parent);
  }
  std::vector<std::string> ids;
  for (std::size_t c = 0; c < members.size(); ++c) ids.push_back("h" + std::to_string(c));
  return Clustering(make_numbered_universe(n), std::move(ids), std::move(members),
                    edges.empty() ? std::nullopt : std::optional(edges));
}

/// Flat, overlapping or hierarchical, chosen by `kind` (0, 1, 2).
inline Clustering random_clustering(std::size_t kind, std::size_t n, Rng& rng) {
  switch (kind % 3) {
    case 0: return random_flat_partition(n, rng);
    case 1: return random_overlapping(n, rng);
    default: return random_hierarchy(n, rng);
  }
}

/// Same clustering on a universe whose ids are permuted: element i of the
/// input becomes element perm[i]. Cluster ids are reversed as well.
inline Clustering relabel(const Clustering& c, std::span<const Index> perm) {
  std::vector<std::vector<Index>> members(c.num_clusters());
  std::vector<std::string> ids(c.num_clusters());
  const std::size_t kc = c.num_clusters();
  for (std::size_t k = 0; k < kc; ++k) {
    ids[kc - 1 - k] = "r" + c.cluster_id(k);
    for (Index i : c.members(k)) members[kc - 1 - k].push_back(perm[i]);
  }
  std::optional<std::vector<HierarchyDAG::Edge>> edges;
  if (c.hierarchy()) {
    edges.emplace();
    for (const auto& [p, ch] : c.hierarchy()->edges())
      edges->emplace_back(static_cast<Index>(kc - 1 - p), static_cast<Index>(kc - 1 - ch));
  }
  return Clustering(c.universe_ptr(), std::move(ids), std::move(members), edges);
}

inline std::vector<Index> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), Index{0});
  rng.shuffle(std::span<Index>(perm));
  return perm;
}

}  // namespace clucmp::testing
