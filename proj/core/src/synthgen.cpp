#include "clucmp/synthgen.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "clucmp/error.hpp"

namespace clucmp {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::InvalidArgument, "Rng::below needs a positive bound");
  // Reject the low 2^64 mod bound words so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Clustering equal_partition(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0 || n % k != 0)
    throw Error(ErrorCode::IndivisibleSize,
                std::to_string(k) + " clusters do not divide " + std::to_string(n) + " elements");
  std::vector<Index> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<Index>(i * k / n);
  return Clustering::from_labels(make_numbered_universe(n), labels);
}

Clustering shuffle_memberships(const Clustering& c, double p, Rng& rng) {
  if (!c.is_partition()) throw Error(ErrorCode::NotAPartition, "shuffling needs a partition");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidArgument, "shuffle fraction must lie in [0, 1]");
  const std::size_t n = c.num_elements();
  const auto count = static_cast<std::size_t>(std::floor(p * static_cast<double>(n)));

  std::vector<Index> labels = c.labels();
  // Partial Fisher-Yates: the first `count` slots become a uniform sample.
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(order[i], order[j]);
  }
  std::vector<Index> picked(count);
  for (std::size_t i = 0; i < count; ++i) picked[i] = labels[order[i]];
  rng.shuffle(std::span<Index>(picked));
  for (std::size_t i = 0; i < count; ++i) labels[order[i]] = picked[i];
  return Clustering::from_labels(c.universe_ptr(), labels);
}

Clustering random_partition(std::size_t n, std::size_t c, Rng& rng) {
  if (c == 0 || c > n)
    throw Error(ErrorCode::InvalidArgument, "cluster count must lie in [1, N]");
  std::vector<Index> labels(n);
  const std::size_t base = n / c;
  const std::size_t extra = n % c;
  std::size_t pos = 0;
  for (std::size_t k = 0; k < c; ++k) {
    const std::size_t size = base + (k < extra ? 1 : 0);
    for (std::size_t s = 0; s < size; ++s) labels[pos++] = static_cast<Index>(k);
  }
  rng.shuffle(std::span<Index>(labels));
  return Clustering::from_labels(make_numbered_universe(n), labels);
}

bool pa_step(std::span<Index> labels, std::span<std::size_t> sizes, Rng& rng) {
  const std::size_t n = labels.size();
  const auto mover = static_cast<std::size_t>(rng.below(n));
  const Index target = labels[static_cast<std::size_t>(rng.below(n))];
  const Index from = labels[mover];
  if (target == from || sizes[from] == 1) return false;
  --sizes[from];
  ++sizes[target];
  labels[mover] = target;
  return true;
}

void pa_skew_walk(const Clustering& c, std::size_t steps, Rng& rng,
                  const std::function<void(std::size_t, std::span<const Index>,
                                           std::span<const std::size_t>)>& visit) {
  if (!c.is_partition()) throw Error(ErrorCode::NotAPartition, "preferential attachment needs a partition");
  std::vector<Index> labels = c.labels();
  std::vector<std::size_t> sizes = c.cluster_sizes();
  visit(0, labels, sizes);
  for (std::size_t s = 1; s <= steps; ++s) {
    pa_step(labels, sizes, rng);
    visit(s, labels, sizes);
  }
}

std::vector<SkewSnapshot> pa_skew(const Clustering& c, std::size_t steps, Rng& rng) {
  std::vector<SkewSnapshot> out;
  out.reserve(steps + 1);
  const std::vector<std::string> ids = [&] {
    std::vector<std::string> v;
    for (std::size_t k = 0; k < c.num_clusters(); ++k) v.push_back(c.cluster_id(k));
    return v;
  }();
  pa_skew_walk(c, steps, rng, [&](std::size_t, std::span<const Index> labels, std::span<const std::size_t> sizes) {
    std::vector<std::vector<Index>> members(sizes.size());
    for (std::size_t i = 0; i < labels.size(); ++i) members[labels[i]].push_back(static_cast<Index>(i));
    out.push_back({Clustering(c.universe_ptr(), ids, std::move(members)), size_entropy(sizes, labels.size())});
  });
  return out;
}

Clustering binary_hierarchy(std::size_t depth, std::size_t leaf_size) {
  if (depth < 1 || depth > 20) throw Error(ErrorCode::InvalidArgument, "hierarchy depth must lie in [1, 20]");
  if (leaf_size < 1) throw Error(ErrorCode::InvalidArgument, "leaf size must be positive");
  const std::size_t n = leaf_size << depth;
  std::vector<std::string> ids;
  std::vector<std::vector<Index>> members;
  std::vector<HierarchyDAG::Edge> edges;
  // Cluster (d, k) has index 2^d - 1 + k, so its children are 2 * index + 1 and + 2.
  for (std::size_t d = 0; d <= depth; ++d) {
    const std::size_t count = std::size_t{1} << d;
    const std::size_t span = n / count;
    for (std::size_t k = 0; k < count; ++k) {
      ids.push_back("h" + std::to_string(d) + "." + std::to_string(k));
      auto& m = members.emplace_back(span);
      std::iota(m.begin(), m.end(), static_cast<Index>(k * span));
      const std::size_t self = count - 1 + k;
      if (d < depth) {
        edges.emplace_back(static_cast<Index>(self), static_cast<Index>(2 * self + 1));
        edges.emplace_back(static_cast<Index>(self), static_cast<Index>(2 * self + 2));
      }
    }
  }
  return Clustering(make_numbered_universe(n), std::move(ids), std::move(members), std::move(edges));
}

Clustering level_slice(const Clustering& h, std::size_t d) {
  const auto& dag = h.hierarchy();
  if (!dag) throw Error(ErrorCode::NoSuchLevel, "clustering has no hierarchy");
  std::vector<std::string> ids;
  std::vector<std::vector<Index>> members;
  for (std::size_t k = 0; k < h.num_clusters(); ++k) {
    if (dag->depth(k) != d) continue;
    ids.push_back(h.cluster_id(k));
    auto m = h.members(k);
    members.emplace_back(m.begin(), m.end());
  }
  if (ids.empty()) throw Error(ErrorCode::NoSuchLevel, "no cluster at depth " + std::to_string(d));
  return Clustering(h.universe_ptr(), std::move(ids), std::move(members));
}

}  // namespace clucmp
