#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "clucmp/clustering.hpp"

namespace clucmp {

inline constexpr double kDefaultAlpha = 0.9;
inline constexpr double kDefaultR = 8.0;

/// Membership weight of a cluster at rescaled level `level`: e^(r * level).
double hierarchy_weight(double level, double r);

/// Sparse N x K bipartite element-cluster weights, stored by element.
class AffiliationGraph {
 public:
  struct Entry {
    Index cluster;
    double weight;
  };

  AffiliationGraph(std::size_t num_clusters, std::vector<std::vector<Entry>> rows);

  [[nodiscard]] std::size_t num_elements() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t num_clusters() const noexcept { return num_clusters_; }
  [[nodiscard]] std::span<const Entry> row(std::size_t i) const { return rows_.at(i); }
  [[nodiscard]] double weight(std::size_t i, std::size_t k) const;

  /// Every weight multiplied by `s`.
  [[nodiscard]] AffiliationGraph scaled(double s) const;

 private:
  std::size_t num_clusters_;
  std::vector<std::vector<Entry>> rows_;
};

/// Unit weights for flat clusterings; e^(r * level) when a hierarchy is present.
AffiliationGraph build_affiliation(const Clustering& c, double r = kDefaultR);

/// Row-stochastic element-to-element transition matrix in CSR form.
class ElementGraph {
 public:
  ElementGraph(std::size_t n, std::vector<std::size_t> offsets, std::vector<Index> columns,
               std::vector<double> values);

  /// Dense constructor, mainly for tests that need non-stochastic inputs.
  static ElementGraph from_dense(const Eigen::MatrixXd& w);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] std::span<const Index> columns(std::size_t i) const;
  [[nodiscard]] std::span<const double> values(std::size_t i) const;
  [[nodiscard]] double weight(std::size_t i, std::size_t j) const;
  [[nodiscard]] double row_sum(std::size_t i) const;
  [[nodiscard]] std::size_t nonzeros() const noexcept { return values_.size(); }
  [[nodiscard]] Eigen::MatrixXd dense() const;

 private:
  std::size_t n_;
  std::vector<std::size_t> offsets_;
  std::vector<Index> columns_;
  std::vector<double> values_;
};

/// w_ij = sum_g a_ig a_jg / (sum_k a_ik * sum_m a_mg), self-loops included.
ElementGraph project_element_graph(const AffiliationGraph& a);

struct AffinityRow {
  Index source = 0;
  double alpha = kDefaultAlpha;
  std::vector<double> p;
};

struct PprOptions {
  /// Graphs up to this size are solved exactly with a dense LU.
  std::size_t dense_limit = 2000;
  double tolerance = 1e-12;
  /// 0 selects 10 * ceil(ln(tolerance) / ln(alpha)).
  std::size_t max_iterations = 0;
};

/// Stationary distribution of (1 - alpha) e_source + alpha W.
/// Throws NonStochasticGraph, NoConvergence, InvalidArgument.
AffinityRow ppr_solve(const ElementGraph& w, double alpha, Index source,
                      const PprOptions& options = {});

/// Power iteration regardless of size.
AffinityRow ppr_power_iteration(const ElementGraph& w, double alpha, Index source,
                                const PprOptions& options = {});

/// Closed-form rows for a partition: p_j = (1 - alpha) [i == j] + alpha / |c| on
/// the cluster of i. Throws NotAPartition.
std::vector<AffinityRow> ppr_partition_analytic(const Clustering& c, double alpha = kDefaultAlpha);

/// Groups of elements with identical cluster membership sets. Classes are
/// ordered by their smallest element; each class lists its elements ascending.
struct MembershipClasses {
  std::vector<Index> class_of;
  std::vector<std::vector<Index>> classes;
};

MembershipClasses membership_classes(const Clustering& c);

enum class PprMethod {
  Auto,      ///< analytic rows for partitions, numeric otherwise
  Analytic,  ///< requires a partition
  Numeric,   ///< dense LU (n <= dense_limit) or power iteration
};

/// All per-element PPR distributions of one clustering. One solve is done per
/// membership class; other class members are obtained by swapping the source
/// coordinate. Immutable after construction and safe to share across threads.
class AffinityModel {
 public:
  AffinityModel(const Clustering& c, double alpha = kDefaultAlpha, double r = kDefaultR,
                PprMethod method = PprMethod::Auto, const PprOptions& options = {});

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] double alpha() const noexcept { return alpha_; }
  [[nodiscard]] bool analytic() const noexcept { return analytic_; }

  /// Writes the distribution of source `i` into `out` (size n).
  void fill_row(Index i, std::span<double> out) const;
  [[nodiscard]] AffinityRow row(Index i) const;

 private:
  std::size_t n_;
  double alpha_;
  bool analytic_;
  // analytic form
  std::vector<Index> cluster_of_;
  std::vector<std::vector<Index>> cluster_members_;
  // numeric form
  std::vector<Index> class_of_;
  std::vector<Index> class_rep_;
  Eigen::MatrixXd rep_rows_;  // one row per class, for its representative
};

}  // namespace clucmp
