#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "clucmp/clustering.hpp"

namespace clucmp {

/// K_A x K_B co-membership counts n_km = |A_k ∩ B_m| with the cluster sizes
/// as marginals. For overlapping inputs the marginals are still cluster sizes,
/// so they need not equal the row/column sums of `counts`.
struct ContingencyTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> counts;    // row-major
  std::vector<std::int64_t> row_sums;  // a_k
  std::vector<std::int64_t> col_sums;  // b_m
  std::int64_t n = 0;                  // universe size
  bool partitions = false;             // both inputs were partitions

  [[nodiscard]] std::int64_t at(std::size_t k, std::size_t m) const { return counts[k * cols + m]; }
  [[nodiscard]] ContingencyTable transposed() const;
};

/// Throws UniverseMismatch.
ContingencyTable contingency(const Clustering& a, const Clustering& b);

struct PairCounts {
  std::int64_t n11 = 0;  // together in both
  std::int64_t n10 = 0;  // together in A only
  std::int64_t n01 = 0;  // together in B only
  std::int64_t n00 = 0;  // apart in both

  friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

// The pair-counting and entropy measures below are defined for partitions
// only and throw MeasureInputUnsupported on tables built from anything else.

PairCounts pair_counts(const ContingencyTable& t);

double rand_index(const ContingencyTable& t);
/// 1.0 when no pair is co-clustered in either clustering.
double jaccard(const ContingencyTable& t);
/// Harmonic mean of pair precision and recall; 1.0 in the same degenerate case.
double f_measure(const ContingencyTable& t);

/// Hubert-Arabie chance-corrected Rand index under the permutation model.
/// Throws DegenerateARI when the expectation equals 1 for non-identical inputs.
double adjusted_rand(const ContingencyTable& t);

/// E_perm[RI] for the table's cluster size sequences.
double expected_rand_index(const ContingencyTable& t);

enum class NmiNorm { Min, Sqrt, Avg, Max };

double entropy_rows(const ContingencyTable& t);
double entropy_cols(const ContingencyTable& t);
double joint_entropy(const ContingencyTable& t);
double mutual_information(const ContingencyTable& t);

/// MI divided by the chosen entropy bound. Both clusterings trivial -> 1.0;
/// a zero bound otherwise -> 0.0.
double nmi(const ContingencyTable& t, NmiNorm norm = NmiNorm::Avg);

/// Variation of information in nats, 2 H(A,B) - H(A) - H(B).
double variation_of_information(const ContingencyTable& t);

/// Overlapping NMI (Lancichinetti et al.), valid for any coverings. Uses the
/// table counts and cluster sizes only.
double onmi(const ContingencyTable& t);
double onmi(const Clustering& a, const Clustering& b);

}  // namespace clucmp
