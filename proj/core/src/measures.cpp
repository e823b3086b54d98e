#include "clucmp/measures.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>

#include "clucmp/error.hpp"

namespace clucmp {
namespace {

struct Entry {
  Measure measure;
  std::string_view name;
};

constexpr std::array<Entry, 11> kRegistry{{
    {Measure::ElSim, "elsim"},
    {Measure::RandIndex, "ri"},
    {Measure::AdjustedRand, "ari"},
    {Measure::Jaccard, "jaccard"},
    {Measure::FMeasure, "fmeasure"},
    {Measure::NmiMin, "nmi_min"},
    {Measure::NmiSqrt, "nmi_sqrt"},
    {Measure::NmiAvg, "nmi_avg"},
    {Measure::NmiMax, "nmi_max"},
    {Measure::VariationOfInformation, "vi"},
    {Measure::Onmi, "onmi"},
}};

constexpr std::array<Measure, 11> kAll = [] {
  std::array<Measure, 11> out{};
  for (std::size_t i = 0; i < kRegistry.size(); ++i) out[i] = kRegistry[i].measure;
  return out;
}();

double from_table(Measure m, const ContingencyTable& t) {
  switch (m) {
    case Measure::RandIndex: return rand_index(t);
    case Measure::AdjustedRand: return adjusted_rand(t);
    case Measure::Jaccard: return jaccard(t);
    case Measure::FMeasure: return f_measure(t);
    case Measure::NmiMin: return nmi(t, NmiNorm::Min);
    case Measure::NmiSqrt: return nmi(t, NmiNorm::Sqrt);
    case Measure::NmiAvg: return nmi(t, NmiNorm::Avg);
    case Measure::NmiMax: return nmi(t, NmiNorm::Max);
    case Measure::VariationOfInformation: return variation_of_information(t);
    case Measure::Onmi: return onmi(t);
    case Measure::ElSim: break;
  }
  throw Error(ErrorCode::InvalidArgument, "elsim is not a contingency-table measure");
}

}  // namespace

std::span<const Measure> all_measures() { return kAll; }

std::string_view measure_name(Measure m) {
  for (const auto& e : kRegistry)
    if (e.measure == m) return e.name;
  return "unknown";
}

Measure parse_measure(std::string_view name) {
  for (const auto& e : kRegistry)
    if (e.name == name) return e.measure;
  throw Error(ErrorCode::UnknownMeasure, "unknown measure '" + std::string(name) + "'");
}

std::vector<Measure> parse_measure_list(std::string_view comma_separated) {
  std::vector<Measure> out;
  std::size_t start = 0;
  while (start <= comma_separated.size()) {
    const std::size_t end = std::min(comma_separated.find(',', start), comma_separated.size());
    const auto token = comma_separated.substr(start, end - start);
    if (!token.empty()) out.push_back(parse_measure(token));
    start = end + 1;
  }
  if (out.empty()) throw Error(ErrorCode::UnknownMeasure, "empty measure list");
  return out;
}

bool accepts_general_clusterings(Measure m) { return m == Measure::ElSim || m == Measure::Onmi; }

double evaluate(Measure m, const Clustering& a, const Clustering& b, const SimilarityOptions& options) {
  const Measure one[] = {m};
  return evaluate_many(one, a, b, options).front();
}

std::vector<double> evaluate_many(std::span<const Measure> measures, const Clustering& a,
                                  const Clustering& b, const SimilarityOptions& options) {
  if (!a.same_universe(b))
    throw Error(ErrorCode::UniverseMismatch, "clusterings are defined on different element sets");
  std::optional<ContingencyTable> table;
  std::vector<double> out;
  out.reserve(measures.size());
  for (Measure m : measures) {
    if (m == Measure::ElSim) {
      out.push_back(element_scores(a, b, options).mean());
      continue;
    }
    if (!accepts_general_clusterings(m) && !(a.is_partition() && b.is_partition()))
      throw Error(ErrorCode::MeasureInputUnsupported,
                  std::string(measure_name(m)) + " is defined for partitions only");
    if (!table) table = contingency(a, b);
    out.push_back(from_table(m, *table));
  }
  return out;
}

ComparisonReport compare(Measure m, const Clustering& a, const Clustering& b,
                         const SimilarityOptions& options, bool with_element_scores) {
  if (m == Measure::ElSim) {
    ComparisonReport report = similarity(a, b, options);
    if (!with_element_scores) report.element_scores.reset();
    return report;
  }
  ComparisonReport report;
  report.measure = std::string(measure_name(m));
  report.score = evaluate(m, a, b, options);
  switch (m) {
    case Measure::NmiMin: report.params["norm"] = std::string("min"); break;
    case Measure::NmiSqrt: report.params["norm"] = std::string("sqrt"); break;
    case Measure::NmiAvg: report.params["norm"] = std::string("avg"); break;
    case Measure::NmiMax: report.params["norm"] = std::string("max"); break;
    default: break;
  }
  return report;
}

}  // namespace clucmp
