#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "clucmp/clustering.hpp"
#include "clucmp/elementsim.hpp"

namespace clucmp {

/// Parses the clustering JSON document:
///   {"clusters": {"<cluster-id>": ["<element-id>", ...], ...},
///    "hierarchy": [["<parent-id>", "<child-id>"], ...]}   // optional
/// Throws ParseError on malformed documents; validation errors from
/// build_clustering propagate unchanged.
Clustering parse_clustering_json(std::string_view text);

/// Reads and parses a file. Throws ParseError if it cannot be read.
Clustering load_clustering(const std::filesystem::path& path);

std::string clustering_to_json(const Clustering& c);

/// {"measure": ..., "params": {...}, "score": ..., "element_scores": {id: score}}
std::string report_to_json(const ComparisonReport& report, int indent = 2);

/// Shortest round-trip decimal form, independent of the C locale.
std::string format_double(double value);

}  // namespace clucmp
