#include "clucmp/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "clucmp/error.hpp"

namespace clucmp {
namespace {

void require_partitions(const ContingencyTable& t, const char* measure) {
  if (!t.partitions)
    throw Error(ErrorCode::MeasureInputUnsupported,
                std::string(measure) + " is defined for partitions only");
}

double choose2(std::int64_t x) { return 0.5 * static_cast<double>(x) * static_cast<double>(x - 1); }

// -p ln p with h(0) = 0.
double h(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

double entropy_of(const std::vector<std::int64_t>& sizes, std::int64_t n) {
  const double total = static_cast<double>(n);
  double out = 0.0;
  for (std::int64_t s : sizes) out += h(static_cast<double>(s) / total);
  return out;
}

bool identical_partitions(const ContingencyTable& t) {
  if (t.rows != t.cols) return false;
  for (std::size_t k = 0; k < t.rows; ++k) {
    std::size_t nonzero = 0;
    for (std::size_t m = 0; m < t.cols; ++m) nonzero += t.at(k, m) != 0;
    if (nonzero != 1) return false;
  }
  for (std::size_t m = 0; m < t.cols; ++m) {
    std::size_t nonzero = 0;
    for (std::size_t k = 0; k < t.rows; ++k) nonzero += t.at(k, m) != 0;
    if (nonzero != 1) return false;
  }
  return true;
}

// Sum over clusters of H(X_k | Y) / H(X_k), with H(X_k | Y) minimised over the
// columns that pass the matching constraint.
double normalized_conditional_entropy(const ContingencyTable& t) {
  const double total = static_cast<double>(t.n);
  double sum = 0.0;
  for (std::size_t k = 0; k < t.rows; ++k) {
    const std::int64_t a = t.row_sums[k];
    const double hx = h(static_cast<double>(a) / total) + h(static_cast<double>(t.n - a) / total);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t m = 0; m < t.cols; ++m) {
      const std::int64_t b = t.col_sums[m];
      const std::int64_t both = t.at(k, m);
      const double h11 = h(static_cast<double>(both) / total);
      const double h10 = h(static_cast<double>(a - both) / total);
      const double h01 = h(static_cast<double>(b - both) / total);
      const double h00 = h(static_cast<double>(t.n - a - b + both) / total);
      if (!(h11 + h00 > h01 + h10)) continue;
      const double hy = h(static_cast<double>(b) / total) + h(static_cast<double>(t.n - b) / total);
      best = std::min(best, std::max(0.0, (h11 + h10 + h01 + h00) - hy));
    }
    const double conditional = std::isinf(best) ? hx : best;
    sum += hx > 0.0 ? conditional / hx : 0.0;
  }
  return sum / static_cast<double>(t.rows);
}

}  // namespace

ContingencyTable ContingencyTable::transposed() const {
  ContingencyTable out;
  out.rows = cols;
  out.cols = rows;
  out.counts.resize(counts.size());
  for (std::size_t k = 0; k < rows; ++k)
    for (std::size_t m = 0; m < cols; ++m) out.counts[m * rows + k] = at(k, m);
  out.row_sums = col_sums;
  out.col_sums = row_sums;
  out.n = n;
  out.partitions = partitions;
  return out;
}

ContingencyTable contingency(const Clustering& a, const Clustering& b) {
  if (!a.same_universe(b))
    throw Error(ErrorCode::UniverseMismatch, "clusterings are defined on different element sets");
  ContingencyTable t;
  t.rows = a.num_clusters();
  t.cols = b.num_clusters();
  t.counts.assign(t.rows * t.cols, 0);
  t.n = static_cast<std::int64_t>(a.num_elements());
  t.partitions = a.is_partition() && b.is_partition();
  for (std::size_t i = 0; i < a.num_elements(); ++i)
    for (Index k : a.memberships(i))
      for (Index m : b.memberships(i)) ++t.counts[k * t.cols + m];
  for (std::size_t k = 0; k < t.rows; ++k) t.row_sums.push_back(static_cast<std::int64_t>(a.cluster_size(k)));
  for (std::size_t m = 0; m < t.cols; ++m) t.col_sums.push_back(static_cast<std::int64_t>(b.cluster_size(m)));
  return t;
}

PairCounts pair_counts(const ContingencyTable& t) {
  require_partitions(t, "pair counting");
  auto c2 = [](std::int64_t x) { return x * (x - 1) / 2; };
  PairCounts p;
  for (std::int64_t v : t.counts) p.n11 += c2(v);
  std::int64_t qa = 0, qb = 0;
  for (std::int64_t v : t.row_sums) qa += c2(v);
  for (std::int64_t v : t.col_sums) qb += c2(v);
  p.n10 = qa - p.n11;
  p.n01 = qb - p.n11;
  p.n00 = c2(t.n) - p.n11 - p.n10 - p.n01;
  return p;
}

double rand_index(const ContingencyTable& t) {
  const auto p = pair_counts(t);
  const std::int64_t total = p.n11 + p.n10 + p.n01 + p.n00;
  if (total == 0) return 1.0;
  return static_cast<double>(p.n11 + p.n00) / static_cast<double>(total);
}

double jaccard(const ContingencyTable& t) {
  const auto p = pair_counts(t);
  const std::int64_t denom = p.n11 + p.n10 + p.n01;
  if (denom == 0) return 1.0;
  return static_cast<double>(p.n11) / static_cast<double>(denom);
}

double f_measure(const ContingencyTable& t) {
  const auto p = pair_counts(t);
  const std::int64_t denom = 2 * p.n11 + p.n10 + p.n01;
  if (denom == 0) return 1.0;
  return static_cast<double>(2 * p.n11) / static_cast<double>(denom);
}

double expected_rand_index(const ContingencyTable& t) {
  require_partitions(t, "ARI");
  double qa = 0.0, qb = 0.0;
  for (std::int64_t v : t.row_sums) qa += choose2(v);
  for (std::int64_t v : t.col_sums) qb += choose2(v);
  const double m = choose2(t.n);
  if (m == 0.0) return 1.0;
  return (2.0 * qa * qb - m * (qa + qb) + m * m) / (m * m);
}

double adjusted_rand(const ContingencyTable& t) {
  require_partitions(t, "ARI");
  double n11 = 0.0, qa = 0.0, qb = 0.0;
  for (std::int64_t v : t.counts) n11 += choose2(v);
  for (std::int64_t v : t.row_sums) qa += choose2(v);
  for (std::int64_t v : t.col_sums) qb += choose2(v);
  const double m = choose2(t.n);
  // (RI - E) / (1 - E), multiplied through by m^2 / 2.
  const double numerator = m * n11 - qa * qb;
  const double denominator = 0.5 * m * (qa + qb) - qa * qb;
  if (denominator == 0.0) {
    if (identical_partitions(t)) return 1.0;
    throw Error(ErrorCode::DegenerateARI, "expected Rand index equals 1 for non-identical partitions");
  }
  return numerator / denominator;
}

double entropy_rows(const ContingencyTable& t) { return entropy_of(t.row_sums, t.n); }
double entropy_cols(const ContingencyTable& t) { return entropy_of(t.col_sums, t.n); }

double joint_entropy(const ContingencyTable& t) {
  require_partitions(t, "joint entropy");
  return entropy_of(t.counts, t.n);
}

double mutual_information(const ContingencyTable& t) {
  require_partitions(t, "mutual information");
  const double total = static_cast<double>(t.n);
  double mi = 0.0;
  for (std::size_t k = 0; k < t.rows; ++k) {
    for (std::size_t m = 0; m < t.cols; ++m) {
      const std::int64_t v = t.at(k, m);
      if (v == 0) continue;
      const double nv = static_cast<double>(v);
      mi += nv / total *
            std::log(nv * total / (static_cast<double>(t.row_sums[k]) * static_cast<double>(t.col_sums[m])));
    }
  }
  return std::max(0.0, mi);
}

double nmi(const ContingencyTable& t, NmiNorm norm) {
  const double ha = entropy_rows(t);
  const double hb = entropy_cols(t);
  const double mi = mutual_information(t);
  if ((ha == 0.0 && hb == 0.0) || identical_partitions(t)) return 1.0;
  double bound = 0.0;
  switch (norm) {
    case NmiNorm::Min: bound = std::min(ha, hb); break;
    case NmiNorm::Sqrt: bound = std::sqrt(ha * hb); break;
    case NmiNorm::Avg: bound = 0.5 * (ha + hb); break;
    case NmiNorm::Max: bound = std::max(ha, hb); break;
  }
  if (bound == 0.0) return 0.0;
  return std::clamp(mi / bound, 0.0, 1.0);
}

double variation_of_information(const ContingencyTable& t) {
  const double hab = joint_entropy(t);
  if (identical_partitions(t)) return 0.0;
  return std::max(0.0, 2.0 * hab - entropy_rows(t) - entropy_cols(t));
}

double onmi(const ContingencyTable& t) {
  const double x_given_y = normalized_conditional_entropy(t);
  const double y_given_x = normalized_conditional_entropy(t.transposed());
  return 1.0 - 0.5 * (x_given_y + y_given_x);
}

double onmi(const Clustering& a, const Clustering& b) { return onmi(contingency(a, b)); }

}  // namespace clucmp
