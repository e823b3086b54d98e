#include "clucmp/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "clucmp/error.hpp"

namespace clucmp {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::EmptyCluster: return "EmptyCluster";
    case ErrorCode::DuplicateCluster: return "DuplicateCluster";
    case ErrorCode::CyclicHierarchy: return "CyclicHierarchy";
    case ErrorCode::UnknownClusterInDAG: return "UnknownClusterInDAG";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::NonStochasticGraph: return "NonStochasticGraph";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::MeasureInputUnsupported: return "MeasureInputUnsupported";
    case ErrorCode::DegenerateARI: return "DegenerateARI";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::TooFewClusterings: return "TooFewClusterings";
    case ErrorCode::IndivisibleSize: return "IndivisibleSize";
    case ErrorCode::NoSuchLevel: return "NoSuchLevel";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnknownMeasure: return "UnknownMeasure";
    case ErrorCode::UnknownScenario: return "UnknownScenario";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// ElementUniverse

ElementUniverse::ElementUniverse(std::vector<std::string> ids) : ids_(std::move(ids)) {
  if (ids_.empty()) throw Error(ErrorCode::EmptyInput, "element universe is empty");
  if (!std::is_sorted(ids_.begin(), ids_.end())) std::sort(ids_.begin(), ids_.end());
  auto dup = std::adjacent_find(ids_.begin(), ids_.end());
  if (dup != ids_.end()) throw Error(ErrorCode::InvalidArgument, "duplicate element id '" + *dup + "'");
}

std::optional<Index> ElementUniverse::index_of(std::string_view id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<Index>(it - ids_.begin());
}

std::shared_ptr<const ElementUniverse> make_numbered_universe(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::EmptyInput, "element universe is empty");
  const std::size_t width = std::to_string(n - 1).size();
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string s = std::to_string(i);
    ids.push_back(std::string(width - s.size(), '0') + s);
  }
  return std::make_shared<const ElementUniverse>(std::move(ids));
}

// ---------------------------------------------------------------------------
// HierarchyDAG

HierarchyDAG::HierarchyDAG(std::vector<std::string> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  const std::size_t k = nodes_.size();
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  std::vector<std::vector<Index>> children(k);
  std::vector<std::size_t> indegree(k, 0);
  for (const auto& [parent, child] : edges_) {
    if (parent >= k || child >= k)
      throw Error(ErrorCode::UnknownClusterInDAG, "hierarchy edge references unknown cluster");
    if (parent == child)
      throw Error(ErrorCode::CyclicHierarchy, "self-loop on cluster '" + nodes_[parent] + "'");
    children[parent].push_back(child);
    ++indegree[child];
  }

  // Kahn's algorithm; a leftover node means a cycle.
  std::vector<Index> order;
  order.reserve(k);
  for (Index v = 0; v < k; ++v)
    if (indegree[v] == 0) order.push_back(v);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Index c : children[order[head]])
      if (--indegree[c] == 0) order.push_back(c);
  }
  if (order.size() != k) throw Error(ErrorCode::CyclicHierarchy, "hierarchy contains a cycle");

  depth_.assign(k, 0);
  for (Index v : order)
    for (Index c : children[v]) depth_[c] = std::max(depth_[c], depth_[v] + 1);
  height_.assign(k, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (Index c : children[*it]) height_[*it] = std::max(height_[*it], height_[c] + 1);

  levels_.resize(k);
  for (std::size_t v = 0; v < k; ++v) {
    if (height_[v] == 0) {
      levels_[v] = 1.0;  // leaves, including isolated root+leaf clusters
    } else if (depth_[v] == 0) {
      levels_[v] = 0.0;
    } else {
      levels_[v] = static_cast<double>(depth_[v]) / static_cast<double>(depth_[v] + height_[v]);
    }
  }
}

std::map<std::string, double> rescale_levels(const HierarchyDAG& dag) {
  std::map<std::string, double> out;
  for (std::size_t k = 0; k < dag.num_nodes(); ++k) out.emplace(dag.node_id(k), dag.level(k));
  return out;
}

// ---------------------------------------------------------------------------
// Clustering

Clustering::Clustering(std::shared_ptr<const ElementUniverse> universe,
                       std::vector<std::string> cluster_ids,
                       std::vector<std::vector<Index>> members,
                       std::optional<std::vector<HierarchyDAG::Edge>> hierarchy_edges)
    : universe_(std::move(universe)), cluster_ids_(std::move(cluster_ids)) {
  if (!universe_) throw Error(ErrorCode::InvalidArgument, "null universe");
  if (members.empty()) throw Error(ErrorCode::EmptyInput, "clustering has no clusters");
  if (members.size() != cluster_ids_.size())
    throw Error(ErrorCode::InvalidArgument, "cluster id count does not match member lists");
  {
    std::vector<std::string> sorted_ids = cluster_ids_;
    std::sort(sorted_ids.begin(), sorted_ids.end());
    auto dup = std::adjacent_find(sorted_ids.begin(), sorted_ids.end());
    if (dup != sorted_ids.end())
      throw Error(ErrorCode::DuplicateCluster, "duplicate cluster id '" + *dup + "'");
  }

  const std::size_t n = universe_->size();
  const std::size_t k = members.size();
  member_offsets_.reserve(k + 1);
  member_offsets_.push_back(0);
  std::vector<std::size_t> count(n, 0);
  for (std::size_t c = 0; c < k; ++c) {
    auto& m = members[c];
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    if (m.empty()) throw Error(ErrorCode::EmptyCluster, "cluster '" + cluster_ids_[c] + "' is empty");
    if (m.back() >= n) throw Error(ErrorCode::InvalidArgument, "element index out of range");
    for (Index i : m) ++count[i];
    member_data_.insert(member_data_.end(), m.begin(), m.end());
    member_offsets_.push_back(member_data_.size());
  }

  membership_offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (count[i] == 0)
      throw Error(ErrorCode::InvalidArgument,
                  "element '" + universe_->id(i) + "' belongs to no cluster");
    membership_offsets_[i + 1] = membership_offsets_[i] + count[i];
  }
  membership_data_.resize(membership_offsets_[n]);
  std::vector<std::size_t> cursor(membership_offsets_.begin(), membership_offsets_.end() - 1);
  for (std::size_t c = 0; c < k; ++c)
    for (Index i : members[c]) membership_data_[cursor[i]++] = static_cast<Index>(c);

  is_disjoint_ = std::all_of(count.begin(), count.end(), [](std::size_t x) { return x == 1; });
  if (hierarchy_edges) hierarchy_.emplace(cluster_ids_, std::move(*hierarchy_edges));
  is_partition_ = is_disjoint_ && !hierarchy_;
}

Clustering Clustering::from_labels(std::shared_ptr<const ElementUniverse> universe,
                                   std::span<const Index> labels) {
  if (!universe) throw Error(ErrorCode::InvalidArgument, "null universe");
  if (labels.size() != universe->size())
    throw Error(ErrorCode::InvalidArgument, "label count does not match universe size");
  const Index k = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::vector<Index>> members(k);
  for (std::size_t i = 0; i < labels.size(); ++i) members[labels[i]].push_back(static_cast<Index>(i));
  const std::size_t width = std::to_string(k == 0 ? 0 : k - 1).size();
  std::vector<std::string> ids;
  ids.reserve(k);
  for (Index c = 0; c < k; ++c) {
    std::string s = std::to_string(c);
    ids.push_back("c" + std::string(width - s.size(), '0') + s);
  }
  return Clustering(std::move(universe), std::move(ids), std::move(members));
}

bool Clustering::same_universe(const Clustering& other) const {
  return universe_ == other.universe_ || *universe_ == *other.universe_;
}

std::optional<Index> Clustering::cluster_index(std::string_view id) const {
  for (std::size_t k = 0; k < cluster_ids_.size(); ++k)
    if (cluster_ids_[k] == id) return static_cast<Index>(k);
  return std::nullopt;
}

std::span<const Index> Clustering::members(std::size_t k) const {
  const std::size_t b = member_offsets_.at(k);
  return {member_data_.data() + b, member_offsets_.at(k + 1) - b};
}

std::span<const Index> Clustering::memberships(std::size_t i) const {
  const std::size_t b = membership_offsets_.at(i);
  return {membership_data_.data() + b, membership_offsets_.at(i + 1) - b};
}

std::vector<std::size_t> Clustering::cluster_sizes() const {
  std::vector<std::size_t> sizes(num_clusters());
  for (std::size_t k = 0; k < sizes.size(); ++k) sizes[k] = cluster_size(k);
  return sizes;
}

std::vector<Index> Clustering::labels() const {
  if (!is_disjoint_) throw Error(ErrorCode::NotAPartition, "clusters overlap");
  return membership_data_;
}

Clustering build_clustering(
    const std::map<std::string, std::vector<std::string>>& memberships,
    const std::optional<std::vector<std::pair<std::string, std::string>>>& hierarchy_edges) {
  if (memberships.empty()) throw Error(ErrorCode::EmptyInput, "no clusters given");

  std::set<std::string> all;
  for (const auto& [cid, elems] : memberships) {
    if (elems.empty()) throw Error(ErrorCode::EmptyCluster, "cluster '" + cid + "' is empty");
    all.insert(elems.begin(), elems.end());
  }
  auto universe = std::make_shared<const ElementUniverse>(std::vector<std::string>(all.begin(), all.end()));

  std::vector<std::string> ids;
  std::vector<std::vector<Index>> members;
  ids.reserve(memberships.size());
  members.reserve(memberships.size());
  for (const auto& [cid, elems] : memberships) {
    ids.push_back(cid);
    auto& m = members.emplace_back();
    m.reserve(elems.size());
    for (const auto& e : elems) m.push_back(*universe->index_of(e));
  }

  std::optional<std::vector<HierarchyDAG::Edge>> edges;
  if (hierarchy_edges) {
    auto lookup = [&](const std::string& id) -> Index {
      auto it = memberships.find(id);
      if (it == memberships.end())
        throw Error(ErrorCode::UnknownClusterInDAG, "hierarchy references unknown cluster '" + id + "'");
      return static_cast<Index>(std::distance(memberships.begin(), it));
    };
    edges.emplace();
    edges->reserve(hierarchy_edges->size());
    for (const auto& [p, c] : *hierarchy_edges) edges->emplace_back(lookup(p), lookup(c));
  }
  return Clustering(std::move(universe), std::move(ids), std::move(members), std::move(edges));
}

double size_entropy(std::span<const std::size_t> sizes, std::size_t n) {
  double h = 0.0;
  const double total = static_cast<double>(n);
  for (std::size_t s : sizes) {
    if (s == 0) continue;
    const double p = static_cast<double>(s) / total;
    h -= p * std::log(p);
  }
  return h;
}

double cluster_size_entropy(const Clustering& c) {
  const auto sizes = c.cluster_sizes();
  return size_entropy(sizes, c.num_elements());
}

}  // namespace clucmp
