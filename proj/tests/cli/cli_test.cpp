// Runs the built clucmp executable end to end.

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CLUCMP_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(CLUCMP_TEST_DATA) + "/" + name; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

double score_of(const Run& r) { return nlohmann::json::parse(r.out)["score"].get<double>(); }

TEST(CliCompare, SameFileIsOne) {
  const auto r = run("compare " + data("worked_a.json") + " " + data("worked_a.json"));
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(score_of(r), 1.0);
}

TEST(CliCompare, WorkedPair) {
  const auto r = run("compare " + data("worked_a.json") + " " + data("worked_b.json") + " --alpha 0.9");
  ASSERT_EQ(r.status, 0);
  EXPECT_NEAR(score_of(r), 0.5, 1e-10);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["measure"], "elsim");
  EXPECT_EQ(doc["params"]["alpha"].get<double>(), 0.9);
  EXPECT_FALSE(doc.contains("element_scores"));
}

TEST(CliCompare, ElementScores) {
  const auto r = run("compare " + data("worked_a.json") + " " + data("worked_b.json") + " --element-scores");
  ASSERT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_TRUE(doc.contains("element_scores"));
  for (const auto& id : {"1", "2", "3"}) EXPECT_NEAR(doc["element_scores"][id].get<double>(), 0.5, 1e-10);
}

TEST(CliCompare, CrossPairAri) {
  const auto r = run("compare " + data("pairs.json") + " " + data("cross.json") + " --measure ari");
  ASSERT_EQ(r.status, 0);
  EXPECT_NEAR(score_of(r), -0.5, 1e-12);
}

TEST(CliCompare, NmiWithNorm) {
  const auto r = run("compare " + data("pairs.json") + " " + data("pairs.json") + " -m nmi --norm max");
  ASSERT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["measure"], "nmi_max");
  EXPECT_EQ(doc["params"]["norm"], "max");
  EXPECT_EQ(doc["score"].get<double>(), 1.0);
}

TEST(CliCompare, HierarchicalAndOverlapping) {
  auto r = run("compare " + data("hierarchy.json") + " " + data("overlap.json") + " --r 2");
  ASSERT_EQ(r.status, 0);
  const double s = score_of(r);
  EXPECT_GT(s, 0.0);
  EXPECT_LT(s, 1.0);
  r = run("compare " + data("overlap.json") + " " + data("overlap.json") + " -m onmi");
  ASSERT_EQ(r.status, 0);
  EXPECT_NEAR(score_of(r), 1.0, 1e-12);
}

TEST(CliCompare, ExitCodes) {
  EXPECT_EQ(run("compare " + data("broken.json") + " " + data("pairs.json")).status, 2);
  EXPECT_EQ(run("compare " + data("missing.json") + " " + data("pairs.json")).status, 2);
  EXPECT_EQ(run("compare " + data("pairs.json") + " " + data("other_universe.json")).status, 3);
  EXPECT_EQ(run("compare " + data("overlap.json") + " " + data("pairs.json") + " -m ari").status, 4);
  EXPECT_EQ(run("compare " + data("pairs.json") + " " + data("pairs.json") + " -m bogus").status, 1);
}

TEST(CliScenario, ShuffleAtZero) {
  const auto r = run("scenario shuffle --N 64 --K 8 --reps 3 --grid 0 --measures elsim,vi,ari");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "scenario,param,measure,mean,std,reps,seed\n"
            "shuffle,0,ari,1,0,3,0\n"
            "shuffle,0,elsim,1,0,3,0\n"
            "shuffle,0,vi,0,0,3,0\n");
}

TEST(CliScenario, SeedDeterminismToFile) {
  const auto dir = std::filesystem::temp_directory_path() / "clucmp_cli_test";
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.csv", b = dir / "b.csv", c = dir / "c.csv";
  const std::string args = "scenario bothrandom --N 128 --reps 4 --grid 8,16,128 --seed 5 --measures elsim,onmi,nmi_avg";
  ASSERT_EQ(run(args + " --out " + a.string()).status, 0);
  ASSERT_EQ(run(args + " -o " + b.string()).status, 0);
  ASSERT_EQ(run("scenario bothrandom --N 128 --reps 4 --grid 8,16,128 --seed 6 --measures elsim,onmi,nmi_avg -o " +
                c.string())
                .status,
            0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_NE(slurp(a), slurp(c));
  EXPECT_NE(slurp(a).find("bothrandom,128,elsim,1,0,4,5"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(CliScenario, Errors) {
  EXPECT_NE(run("scenario nope").status, 0);
  EXPECT_NE(run("scenario shuffle --measures bogus").status, 0);
}

TEST(CliZoom, RowCount) {
  const auto r = run("zoom --depth 3 --leaf-size 2 --r-grid=-4,0,4");
  ASSERT_EQ(r.status, 0);
  std::size_t lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  EXPECT_EQ(lines, 1u + 3u * 4u);
  EXPECT_EQ(r.out.substr(0, 19), "r,level,similarity\n");
}

}  // namespace
