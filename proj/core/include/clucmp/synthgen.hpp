#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "clucmp/clustering.hpp"

namespace clucmp {

/// Seedable generator with a fixed, documented algorithm ("mt19937_64/v1"):
/// raw 64-bit words come from std::mt19937_64, whose output sequence is fixed
/// by the C++ standard; bounded integers use unbiased rejection on
/// `word % bound`; shuffles are Fisher-Yates from the back. Nothing relies on
/// the implementation-defined std distributions, so outputs match across
/// standard libraries.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64/v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finaliser of (base, stream); used to give every repetition its
/// own independent generator.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// Element i goes to cluster floor(i * k / n). Throws IndivisibleSize.
Clustering equal_partition(std::size_t n, std::size_t k);

/// floor(p * N) uniformly chosen elements have their labels permuted among
/// themselves; cluster count and size sequence are preserved.
Clustering shuffle_memberships(const Clustering& c, double p, Rng& rng);

/// Sizes as equal as possible (differing by at most one), element placement a
/// uniform random permutation.
Clustering random_partition(std::size_t n, std::size_t c, Rng& rng);

/// One preferential-attachment reassignment step on raw labels. A uniform
/// element moves to the cluster of another uniformly drawn element (i.e. a
/// cluster picked proportionally to its current size, own cluster included).
/// A move that would empty a cluster is rejected. Returns true if a label changed.
bool pa_step(std::span<Index> labels, std::span<std::size_t> sizes, Rng& rng);

struct SkewSnapshot {
  Clustering clustering;
  double entropy;
};

/// Runs `steps` reassignment steps and records a snapshot after every step;
/// the first entry is the unmodified input (so the list has steps + 1 entries).
std::vector<SkewSnapshot> pa_skew(const Clustering& c, std::size_t steps, Rng& rng);

/// Streaming form of pa_skew: `visit(step, labels, sizes)` is called for the
/// input (step 0) and after each step, without materialising snapshots.
void pa_skew_walk(const Clustering& c, std::size_t steps, Rng& rng,
                  const std::function<void(std::size_t, std::span<const Index>,
                                           std::span<const std::size_t>)>& visit);

/// Complete binary tree of clusters, 2^d clusters at depth d, leaves holding
/// `leaf_size` consecutive elements, parent -> child hierarchy edges.
Clustering binary_hierarchy(std::size_t depth, std::size_t leaf_size);

/// Flat clustering made of the clusters at hierarchy depth `d` (longest
/// distance from a root). Throws NoSuchLevel.
Clustering level_slice(const Clustering& h, std::size_t d);

}  // namespace clucmp
