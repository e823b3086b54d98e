#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clucmp {

using Index = std::uint32_t;

/// Ordered set of element identifiers. Ids are kept in lexicographic order,
/// which fixes the index (and therefore distribution) order of every
/// per-element quantity computed downstream.
class ElementUniverse {
 public:
  /// `ids` may arrive in any order; duplicates are an error.
  explicit ElementUniverse(std::vector<std::string> ids);

  [[nodiscard]] std::size_t size() const noexcept { return ids_.size(); }
  [[nodiscard]] const std::string& id(std::size_t index) const { return ids_.at(index); }
  [[nodiscard]] std::span<const std::string> ids() const noexcept { return ids_; }
  [[nodiscard]] std::optional<Index> index_of(std::string_view id) const;

  friend bool operator==(const ElementUniverse&, const ElementUniverse&) = default;

 private:
  std::vector<std::string> ids_;
};

/// Zero-padded decimal ids "0".."N-1" (width of N-1), so that lexicographic
/// and numeric order coincide.
std::shared_ptr<const ElementUniverse> make_numbered_universe(std::size_t n);

/// Directed acyclic graph over cluster ids, with rescaled hierarchy levels.
class HierarchyDAG {
 public:
  using Edge = std::pair<Index, Index>;

  /// `nodes` are the cluster ids (node k is cluster k); `edges` are
  /// parent -> child pairs by node index. Throws CyclicHierarchy.
  HierarchyDAG(std::vector<std::string> nodes, std::vector<Edge> edges);

  [[nodiscard]] std::size_t num_nodes() const noexcept { return nodes_.size(); }
  [[nodiscard]] const std::string& node_id(std::size_t k) const { return nodes_.at(k); }
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }

  /// Level in [0,1]: roots 0, leaves 1, interior = depth / (depth + height).
  [[nodiscard]] double level(std::size_t k) const { return levels_.at(k); }
  [[nodiscard]] std::span<const double> levels() const noexcept { return levels_; }

  /// Longest distance from any root (roots are 0).
  [[nodiscard]] std::size_t depth(std::size_t k) const { return depth_.at(k); }
  /// Longest distance to any leaf (leaves are 0).
  [[nodiscard]] std::size_t height(std::size_t k) const { return height_.at(k); }

  [[nodiscard]] bool is_root(std::size_t k) const { return depth_.at(k) == 0; }
  [[nodiscard]] bool is_leaf(std::size_t k) const { return height_.at(k) == 0; }

 private:
  std::vector<std::string> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> height_;
  std::vector<double> levels_;
};

/// Rescaled level per cluster id.
std::map<std::string, double> rescale_levels(const HierarchyDAG& dag);

/// A covering of the element universe by non-empty clusters, optionally
/// organised by a hierarchy. Immutable once built.
class Clustering {
 public:
  /// Low-level constructor used by generators and parsers. `members[k]` lists
  /// element indices of cluster k (any order, duplicates collapsed).
  /// `hierarchy_edges`, when present, are parent -> child cluster indices.
  Clustering(std::shared_ptr<const ElementUniverse> universe,
             std::vector<std::string> cluster_ids,
             std::vector<std::vector<Index>> members,
             std::optional<std::vector<HierarchyDAG::Edge>> hierarchy_edges = std::nullopt);

  /// Partition from one label per element; labels must be dense in [0, K).
  static Clustering from_labels(std::shared_ptr<const ElementUniverse> universe,
                                std::span<const Index> labels);

  [[nodiscard]] const ElementUniverse& universe() const noexcept { return *universe_; }
  [[nodiscard]] const std::shared_ptr<const ElementUniverse>& universe_ptr() const noexcept {
    return universe_;
  }
  [[nodiscard]] bool same_universe(const Clustering& other) const;

  [[nodiscard]] std::size_t num_elements() const noexcept { return universe_->size(); }
  [[nodiscard]] std::size_t num_clusters() const noexcept { return cluster_ids_.size(); }

  [[nodiscard]] const std::string& cluster_id(std::size_t k) const { return cluster_ids_.at(k); }
  [[nodiscard]] std::optional<Index> cluster_index(std::string_view id) const;

  /// Sorted element indices of cluster k.
  [[nodiscard]] std::span<const Index> members(std::size_t k) const;
  /// Sorted cluster indices that contain element i.
  [[nodiscard]] std::span<const Index> memberships(std::size_t i) const;
  [[nodiscard]] std::size_t cluster_size(std::size_t k) const {
    return member_offsets_.at(k + 1) - member_offsets_.at(k);
  }
  [[nodiscard]] std::vector<std::size_t> cluster_sizes() const;

  /// True iff every element is in exactly one cluster and there is no hierarchy.
  [[nodiscard]] bool is_partition() const noexcept { return is_partition_; }
  [[nodiscard]] bool is_disjoint() const noexcept { return is_disjoint_; }
  [[nodiscard]] const std::optional<HierarchyDAG>& hierarchy() const noexcept { return hierarchy_; }

  /// Cluster index of every element. Requires disjoint clusters.
  [[nodiscard]] std::vector<Index> labels() const;

 private:
  std::shared_ptr<const ElementUniverse> universe_;
  std::vector<std::string> cluster_ids_;
  std::vector<std::size_t> member_offsets_;
  std::vector<Index> member_data_;
  std::vector<std::size_t> membership_offsets_;
  std::vector<Index> membership_data_;
  std::optional<HierarchyDAG> hierarchy_;
  bool is_disjoint_ = false;
  bool is_partition_ = false;
};

/// Builds a clustering from id-keyed memberships. The universe is the union of
/// all member ids. Throws EmptyInput, EmptyCluster, CyclicHierarchy,
/// UnknownClusterInDAG.
Clustering build_clustering(
    const std::map<std::string, std::vector<std::string>>& memberships,
    const std::optional<std::vector<std::pair<std::string, std::string>>>& hierarchy_edges =
        std::nullopt);

/// Shannon entropy (nats) of the cluster size distribution a_k / N.
double cluster_size_entropy(const Clustering& c);

/// Same quantity from raw sizes, for generators that track sizes directly.
double size_entropy(std::span<const std::size_t> sizes, std::size_t n);

}  // namespace clucmp
