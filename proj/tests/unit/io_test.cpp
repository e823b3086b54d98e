#include "clucmp/io.hpp"

#include <algorithm>

#include <gtest/gtest.h>
#include <json.hpp>

#include "clucmp/error.hpp"
#include "clucmp/synthgen.hpp"

namespace clucmp {
namespace {

ErrorCode parse_error_of(std::string_view text) {
  try {
    (void)parse_clustering_json(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorCode::InvalidArgument;
}

TEST(Json, ParsesFlatAndHierarchical) {
  const auto c = parse_clustering_json(R"({"clusters": {"c1": ["a", "b"], "c2": ["c"]}})");
  EXPECT_TRUE(c.is_partition());
  EXPECT_EQ(c.num_elements(), 3u);

  const auto h = parse_clustering_json(
      R"({"clusters": {"r": ["a", "b"], "l": ["a"], "m": ["b"]}, "hierarchy": [["r", "l"], ["r", "m"]]})");
  ASSERT_TRUE(h.hierarchy().has_value());
  EXPECT_EQ(h.hierarchy()->edges().size(), 2u);
}

TEST(Json, Errors) {
  EXPECT_EQ(parse_error_of("{"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error_of(R"({"nope": 1})"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error_of(R"({"clusters": {"c": "a"}})"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error_of(R"({"clusters": {"c": [1]}})"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error_of(R"({"clusters": {"c": ["a"]}, "hierarchy": [["c"]]})"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error_of(R"({"clusters": {"c": []}})"), ErrorCode::EmptyCluster);
  EXPECT_EQ(parse_error_of(R"({"clusters": {}})"), ErrorCode::EmptyInput);
  EXPECT_EQ(parse_error_of(R"({"clusters": {"c": ["a"]}, "hierarchy": [["c", "d"]]})"),
            ErrorCode::UnknownClusterInDAG);
  try {
    (void)load_clustering("/nonexistent/clustering.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
}

TEST(Json, RoundTrip) {
  const auto h = binary_hierarchy(2, 3);
  const auto back = parse_clustering_json(clustering_to_json(h));
  EXPECT_EQ(back.universe(), h.universe());
  EXPECT_EQ(back.num_clusters(), h.num_clusters());
  for (std::size_t k = 0; k < h.num_clusters(); ++k) {
    const auto idx = *back.cluster_index(h.cluster_id(k));
    EXPECT_TRUE(std::ranges::equal(back.members(idx), h.members(k)));
    EXPECT_EQ(back.hierarchy()->level(idx), h.hierarchy()->level(k));
  }
}

TEST(Json, ReportShape) {
  ComparisonReport r;
  r.measure = "nmi_avg";
  r.params["norm"] = std::string("avg");
  r.score = 0.25;
  const auto doc = nlohmann::json::parse(report_to_json(r));
  EXPECT_EQ(doc["measure"], "nmi_avg");
  EXPECT_EQ(doc["params"]["norm"], "avg");
  EXPECT_EQ(doc["score"].get<double>(), 0.25);
  EXPECT_FALSE(doc.contains("element_scores"));
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(-0.5), "-0.5");
  const double x = 1.0 / 3.0;
  EXPECT_EQ(std::stod(format_double(x)), x);
}

}  // namespace
}  // namespace clucmp
