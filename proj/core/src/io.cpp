#include "clucmp/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "clucmp/error.hpp"

namespace clucmp {

using nlohmann::json;

Clustering parse_clustering_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("clusters") || !doc["clusters"].is_object())
    throw Error(ErrorCode::ParseError, "expected an object with a \"clusters\" object");

  std::map<std::string, std::vector<std::string>> memberships;
  for (const auto& [cid, elems] : doc["clusters"].items()) {
    if (!elems.is_array()) throw Error(ErrorCode::ParseError, "cluster '" + cid + "' is not an array");
    auto& out = memberships[cid];
    for (const auto& e : elems) {
      if (!e.is_string()) throw Error(ErrorCode::ParseError, "element ids must be strings");
      out.push_back(e.get<std::string>());
    }
  }

  std::optional<std::vector<std::pair<std::string, std::string>>> edges;
  if (doc.contains("hierarchy")) {
    const auto& h = doc["hierarchy"];
    if (!h.is_array()) throw Error(ErrorCode::ParseError, "\"hierarchy\" must be an array");
    edges.emplace();
    for (const auto& e : h) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw Error(ErrorCode::ParseError, "hierarchy entries must be [parent, child] string pairs");
      edges->emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  return build_clustering(memberships, edges);
}

Clustering load_clustering(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_clustering_json(buf.str());
}

std::string clustering_to_json(const Clustering& c) {
  json clusters = json::object();
  for (std::size_t k = 0; k < c.num_clusters(); ++k) {
    json members = json::array();
    for (Index i : c.members(k)) members.push_back(c.universe().id(i));
    clusters[c.cluster_id(k)] = std::move(members);
  }
  json doc{{"clusters", std::move(clusters)}};
  if (const auto& dag = c.hierarchy()) {
    json edges = json::array();
    for (const auto& [p, ch] : dag->edges()) edges.push_back({dag->node_id(p), dag->node_id(ch)});
    doc["hierarchy"] = std::move(edges);
  }
  return doc.dump();
}

std::string report_to_json(const ComparisonReport& report, int indent) {
  json params = json::object();
  for (const auto& [key, value] : report.params)
    std::visit([&](const auto& v) { params[key] = v; }, value);
  json doc{{"measure", report.measure}, {"params", std::move(params)}, {"score", report.score}};
  if (report.element_scores) {
    json scores = json::object();
    const auto& es = *report.element_scores;
    for (std::size_t i = 0; i < es.scores.size(); ++i) scores[es.universe->id(i)] = es.scores[i];
    doc["element_scores"] = std::move(scores);
  }
  return doc.dump(indent);
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw Error(ErrorCode::InvalidArgument, "cannot format number");
  return std::string(buf.data(), end);
}

}  // namespace clucmp
