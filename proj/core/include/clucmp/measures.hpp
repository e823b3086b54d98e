#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "clucmp/baselines.hpp"
#include "clucmp/clustering.hpp"
#include "clucmp/elementsim.hpp"

namespace clucmp {

/// Registry of every comparison measure by its stable external name.
enum class Measure {
  ElSim,
  RandIndex,
  AdjustedRand,
  Jaccard,
  FMeasure,
  NmiMin,
  NmiSqrt,
  NmiAvg,
  NmiMax,
  VariationOfInformation,
  Onmi,
};

/// elsim, ri, ari, jaccard, fmeasure, nmi_min, nmi_sqrt, nmi_avg, nmi_max, vi, onmi
std::span<const Measure> all_measures();
std::string_view measure_name(Measure m);
/// Throws UnknownMeasure.
Measure parse_measure(std::string_view name);
std::vector<Measure> parse_measure_list(std::string_view comma_separated);

/// True if the measure accepts overlapping or hierarchical clusterings.
bool accepts_general_clusterings(Measure m);

/// Single score. Baselines other than ONMI throw MeasureInputUnsupported on
/// non-partitions.
double evaluate(Measure m, const Clustering& a, const Clustering& b,
                const SimilarityOptions& options = {});

/// Several scores for one pair, sharing the contingency table.
std::vector<double> evaluate_many(std::span<const Measure> measures, const Clustering& a,
                                  const Clustering& b, const SimilarityOptions& options = {});

/// Report for the measure; element scores are attached only for elsim and
/// only when requested.
ComparisonReport compare(Measure m, const Clustering& a, const Clustering& b,
                         const SimilarityOptions& options = {}, bool with_element_scores = false);

}  // namespace clucmp
