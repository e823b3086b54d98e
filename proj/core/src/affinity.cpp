#include "clucmp/affinity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "clucmp/error.hpp"
#include "clucmp/parallel.hpp"

namespace clucmp {
namespace {

constexpr double kStochasticTolerance = 1e-10;

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw Error(ErrorCode::InvalidArgument, "alpha must lie in (0, 1), got " + std::to_string(alpha));
}

void check_stochastic(const ElementGraph& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double s = w.row_sum(i);
    if (std::abs(s - 1.0) > kStochasticTolerance)
      throw Error(ErrorCode::NonStochasticGraph,
                  "row " + std::to_string(i) + " sums to " + std::to_string(s));
    for (double v : w.values(i))
      if (v < 0.0) throw Error(ErrorCode::NonStochasticGraph, "negative transition weight");
  }
}

std::size_t iteration_budget(double alpha, const PprOptions& options) {
  if (options.max_iterations > 0) return options.max_iterations;
  return 10 * static_cast<std::size_t>(std::ceil(std::log(options.tolerance) / std::log(alpha)));
}

// Transpose of (I - alpha W); the row vector p solves p (I - alpha W) = rhs.
Eigen::MatrixXd transposed_system(const ElementGraph& w, double alpha) {
  const auto n = static_cast<Eigen::Index>(w.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto cols = w.columns(i);
    auto vals = w.values(i);
    for (std::size_t e = 0; e < cols.size(); ++e)
      m(static_cast<Eigen::Index>(cols[e]), static_cast<Eigen::Index>(i)) -= alpha * vals[e];
  }
  return m;
}

void clamp_nonnegative(std::span<double> p) {
  for (double& x : p)
    if (x < 0.0) x = 0.0;
}

}  // namespace

double hierarchy_weight(double level, double r) { return std::exp(r * level); }

// ---------------------------------------------------------------------------
// AffiliationGraph

AffiliationGraph::AffiliationGraph(std::size_t num_clusters, std::vector<std::vector<Entry>> rows)
    : num_clusters_(num_clusters), rows_(std::move(rows)) {
  std::vector<bool> seen(num_clusters_, false);
  for (const auto& row : rows_) {
    bool positive = false;
    for (const auto& e : row) {
      if (e.cluster >= num_clusters_) throw Error(ErrorCode::InvalidArgument, "cluster index out of range");
      if (!(e.weight >= 0.0)) throw Error(ErrorCode::InvalidArgument, "negative affiliation weight");
      if (e.weight > 0.0) {
        positive = true;
        seen[e.cluster] = true;
      }
    }
    if (!positive) throw Error(ErrorCode::InvalidArgument, "element without positive affiliation");
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw Error(ErrorCode::InvalidArgument, "cluster without positive affiliation");
}

double AffiliationGraph::weight(std::size_t i, std::size_t k) const {
  for (const auto& e : rows_.at(i))
    if (e.cluster == k) return e.weight;
  return 0.0;
}

AffiliationGraph AffiliationGraph::scaled(double s) const {
  auto rows = rows_;
  for (auto& row : rows)
    for (auto& e : row) e.weight *= s;
  return AffiliationGraph(num_clusters_, std::move(rows));
}

AffiliationGraph build_affiliation(const Clustering& c, double r) {
  const auto& dag = c.hierarchy();
  std::vector<std::vector<AffiliationGraph::Entry>> rows(c.num_elements());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (Index k : c.memberships(i)) {
      const double w = dag ? hierarchy_weight(dag->level(k), r) : 1.0;
      rows[i].push_back({k, w});
    }
  }
  return AffiliationGraph(c.num_clusters(), std::move(rows));
}

// ---------------------------------------------------------------------------
// ElementGraph

ElementGraph::ElementGraph(std::size_t n, std::vector<std::size_t> offsets, std::vector<Index> columns,
                           std::vector<double> values)
    : n_(n), offsets_(std::move(offsets)), columns_(std::move(columns)), values_(std::move(values)) {
  if (offsets_.size() != n_ + 1 || offsets_.back() != columns_.size() || columns_.size() != values_.size())
    throw Error(ErrorCode::InvalidArgument, "malformed CSR element graph");
}

ElementGraph ElementGraph::from_dense(const Eigen::MatrixXd& w) {
  if (w.rows() != w.cols()) throw Error(ErrorCode::InvalidArgument, "element graph must be square");
  const auto n = static_cast<std::size_t>(w.rows());
  std::vector<std::size_t> offsets{0};
  std::vector<Index> cols;
  std::vector<double> vals;
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    for (Eigen::Index j = 0; j < w.cols(); ++j) {
      if (w(i, j) != 0.0) {
        cols.push_back(static_cast<Index>(j));
        vals.push_back(w(i, j));
      }
    }
    offsets.push_back(cols.size());
  }
  return ElementGraph(n, std::move(offsets), std::move(cols), std::move(vals));
}

std::span<const Index> ElementGraph::columns(std::size_t i) const {
  return {columns_.data() + offsets_.at(i), offsets_.at(i + 1) - offsets_.at(i)};
}

std::span<const double> ElementGraph::values(std::size_t i) const {
  return {values_.data() + offsets_.at(i), offsets_.at(i + 1) - offsets_.at(i)};
}

double ElementGraph::weight(std::size_t i, std::size_t j) const {
  auto cols = columns(i);
  auto it = std::lower_bound(cols.begin(), cols.end(), static_cast<Index>(j));
  if (it == cols.end() || *it != j) return 0.0;
  return values(i)[static_cast<std::size_t>(it - cols.begin())];
}

double ElementGraph::row_sum(std::size_t i) const {
  double s = 0.0;
  for (double v : values(i)) s += v;
  return s;
}

Eigen::MatrixXd ElementGraph::dense() const {
  const auto n = static_cast<Eigen::Index>(n_);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n_; ++i) {
    auto cols = columns(i);
    auto vals = values(i);
    for (std::size_t e = 0; e < cols.size(); ++e)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(cols[e])) = vals[e];
  }
  return m;
}

ElementGraph project_element_graph(const AffiliationGraph& a) {
  const std::size_t n = a.num_elements();
  const std::size_t k = a.num_clusters();

  std::vector<double> cluster_strength(k, 0.0);
  std::vector<std::vector<std::pair<Index, double>>> cluster_members(k);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : a.row(i)) {
      if (e.weight == 0.0) continue;
      cluster_strength[e.cluster] += e.weight;
      cluster_members[e.cluster].emplace_back(static_cast<Index>(i), e.weight);
    }
  }

  std::vector<std::size_t> offsets{0};
  std::vector<Index> columns;
  std::vector<double> values;
  std::vector<double> acc(n, 0.0);
  std::vector<Index> touched;
  for (std::size_t i = 0; i < n; ++i) {
    double element_strength = 0.0;
    for (const auto& e : a.row(i)) element_strength += e.weight;
    touched.clear();
    for (const auto& e : a.row(i)) {
      if (e.weight == 0.0) continue;
      const double scale = e.weight / (element_strength * cluster_strength[e.cluster]);
      for (const auto& [j, wj] : cluster_members[e.cluster]) {
        if (acc[j] == 0.0) touched.push_back(j);
        acc[j] += scale * wj;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (Index j : touched) {
      columns.push_back(j);
      values.push_back(acc[j]);
      acc[j] = 0.0;
    }
    offsets.push_back(columns.size());
  }
  return ElementGraph(n, std::move(offsets), std::move(columns), std::move(values));
}

// ---------------------------------------------------------------------------
// PPR

AffinityRow ppr_power_iteration(const ElementGraph& w, double alpha, Index source,
                                const PprOptions& options) {
  check_alpha(alpha);
  if (source >= w.size()) throw Error(ErrorCode::InvalidArgument, "source index out of range");
  check_stochastic(w);

  const std::size_t n = w.size();
  const std::size_t budget = iteration_budget(alpha, options);
  std::vector<double> p(n, 0.0), next(n, 0.0);
  p[source] = 1.0;
  for (std::size_t it = 0; it < budget; ++it) {
    std::fill(next.begin(), next.end(), 0.0);
    next[source] = 1.0 - alpha;
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] == 0.0) continue;
      const double mass = alpha * p[i];
      auto cols = w.columns(i);
      auto vals = w.values(i);
      for (std::size_t e = 0; e < cols.size(); ++e) next[cols[e]] += mass * vals[e];
    }
    double diff = 0.0;
    for (std::size_t j = 0; j < n; ++j) diff += std::abs(next[j] - p[j]);
    p.swap(next);
    if (diff <= options.tolerance) return AffinityRow{source, alpha, std::move(p)};
  }
  throw Error(ErrorCode::NoConvergence,
              "power iteration did not reach tolerance within " + std::to_string(budget) + " iterations");
}

AffinityRow ppr_solve(const ElementGraph& w, double alpha, Index source, const PprOptions& options) {
  if (w.size() > options.dense_limit) return ppr_power_iteration(w, alpha, source, options);
  check_alpha(alpha);
  if (source >= w.size()) throw Error(ErrorCode::InvalidArgument, "source index out of range");
  check_stochastic(w);

  const auto n = static_cast<Eigen::Index>(w.size());
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(transposed_system(w, alpha));
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  rhs(source) = 1.0 - alpha;
  Eigen::VectorXd x = lu.solve(rhs);
  AffinityRow row{source, alpha, std::vector<double>(x.data(), x.data() + n)};
  clamp_nonnegative(row.p);
  return row;
}

std::vector<AffinityRow> ppr_partition_analytic(const Clustering& c, double alpha) {
  check_alpha(alpha);
  if (!c.is_partition()) throw Error(ErrorCode::NotAPartition, "analytic PPR needs a partition");
  const std::size_t n = c.num_elements();
  std::vector<AffinityRow> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    AffinityRow row{static_cast<Index>(i), alpha, std::vector<double>(n, 0.0)};
    const Index k = c.memberships(i).front();
    const double share = alpha / static_cast<double>(c.cluster_size(k));
    for (Index j : c.members(k)) row.p[j] = share;
    row.p[i] += 1.0 - alpha;
    rows.push_back(std::move(row));
  }
  return rows;
}

MembershipClasses membership_classes(const Clustering& c) {
  MembershipClasses out;
  out.class_of.resize(c.num_elements());
  std::map<std::vector<Index>, Index> lookup;
  for (std::size_t i = 0; i < c.num_elements(); ++i) {
    auto ms = c.memberships(i);
    std::vector<Index> key(ms.begin(), ms.end());
    auto [it, inserted] = lookup.try_emplace(std::move(key), static_cast<Index>(out.classes.size()));
    if (inserted) out.classes.emplace_back();
    out.classes[it->second].push_back(static_cast<Index>(i));
    out.class_of[i] = it->second;
  }
  return out;
}

// ---------------------------------------------------------------------------
// AffinityModel

AffinityModel::AffinityModel(const Clustering& c, double alpha, double r, PprMethod method,
                             const PprOptions& options)
    : n_(c.num_elements()), alpha_(alpha) {
  check_alpha(alpha);
  if (method == PprMethod::Analytic && !c.is_partition())
    throw Error(ErrorCode::NotAPartition, "analytic PPR needs a partition");
  analytic_ = method == PprMethod::Analytic || (method == PprMethod::Auto && c.is_partition());

  if (analytic_) {
    cluster_of_ = c.labels();
    cluster_members_.resize(c.num_clusters());
    for (std::size_t k = 0; k < c.num_clusters(); ++k) {
      auto m = c.members(k);
      cluster_members_[k].assign(m.begin(), m.end());
    }
    return;
  }

  const auto classes = membership_classes(c);
  class_of_ = classes.class_of;
  class_rep_.reserve(classes.classes.size());
  for (const auto& cls : classes.classes) class_rep_.push_back(cls.front());

  const ElementGraph w = project_element_graph(build_affiliation(c, r));
  check_stochastic(w);
  const auto n = static_cast<Eigen::Index>(n_);
  const auto num_classes = static_cast<Eigen::Index>(class_rep_.size());
  rep_rows_.resize(num_classes, n);

  if (n_ <= options.dense_limit) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(transposed_system(w, alpha));
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(n, num_classes);
    for (Eigen::Index k = 0; k < num_classes; ++k) rhs(class_rep_[static_cast<std::size_t>(k)], k) = 1.0 - alpha;
    rep_rows_ = lu.solve(rhs).transpose();
    for (Eigen::Index k = 0; k < num_classes; ++k)
      for (Eigen::Index j = 0; j < n; ++j)
        if (rep_rows_(k, j) < 0.0) rep_rows_(k, j) = 0.0;
  } else {
    parallel_for(class_rep_.size(), [&](std::size_t k) {
      const auto row = ppr_power_iteration(w, alpha, class_rep_[k], options);
      for (Eigen::Index j = 0; j < n; ++j)
        rep_rows_(static_cast<Eigen::Index>(k), j) = row.p[static_cast<std::size_t>(j)];
    });
  }
}

void AffinityModel::fill_row(Index i, std::span<double> out) const {
  if (i >= n_ || out.size() != n_) throw Error(ErrorCode::InvalidArgument, "bad affinity row request");
  if (analytic_) {
    std::fill(out.begin(), out.end(), 0.0);
    const auto& members = cluster_members_[cluster_of_[i]];
    const double share = alpha_ / static_cast<double>(members.size());
    for (Index j : members) out[j] = share;
    out[i] += 1.0 - alpha_;
    return;
  }
  const Index k = class_of_[i];
  const Index rep = class_rep_[k];
  for (std::size_t j = 0; j < n_; ++j)
    out[j] = rep_rows_(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j));
  if (rep != i) std::swap(out[rep], out[i]);
}

AffinityRow AffinityModel::row(Index i) const {
  AffinityRow r{i, alpha_, std::vector<double>(n_)};
  fill_row(i, r.p);
  return r;
}

}  // namespace clucmp
