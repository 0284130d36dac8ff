#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "flowtri/commands.hpp"
#include "flowtri/serialize.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(FLOWTRI_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(FLOWTRI_DATA) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("flowtri_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

flowtri::Json json_of(const Run& r) { return flowtri::Json::parse(r.out); }

}  // namespace

TEST(Cli, AnalyzeD1) {
  const auto r = run("analyze " + data("d1.json"));
  ASSERT_EQ(r.code, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["command"], "analyze");
  EXPECT_EQ(j["dimension"], 2);
  EXPECT_EQ(j["ehrhart"]["h_star"], flowtri::Json::parse("[1,1,0]"));
  EXPECT_EQ(j["ehrhart"]["codegree"], 2);
  EXPECT_EQ(j["ehrhart"]["L"], flowtri::Json::parse("[1,4,9,16]"));
}

TEST(Cli, AnalyzeParallelEdges) {
  const auto j = json_of(run("analyze " + data("g3.json")));
  EXPECT_EQ(j["dimension"], 2);
  EXPECT_EQ(j["ehrhart"]["h_star"], flowtri::Json::parse("[1,0,0]"));
}

TEST(Cli, MalformedJsonExitsTwo) {
  const auto r = run("analyze " + temp_file("bad.json", "{\"inner_count\": 1, \"edges\": [}"));
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(json_of(r)["ok"]);
}

TEST(Cli, InvalidGraphExitsTwo) {
  const auto path = temp_file("loop.json", R"({"inner_count": 1, "edges": [
    {"id": "a", "tail": "s", "head": 1}, {"id": "b", "tail": 1, "head": 1}, {"id": "c", "tail": 1, "head": "t"}]})");
  EXPECT_EQ(run("analyze " + path).code, 2);
}

TEST(Cli, MissingFileAndBadFlagExitTwo) {
  EXPECT_EQ(run("analyze /nonexistent/graph.json").code, 2);
  EXPECT_EQ(run("analyze " + data("d1.json") + " --format yaml").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, EquatorialD2) {
  const auto r = run("equatorial " + data("d2.json"));
  ASSERT_EQ(r.code, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["facet_transversals"].size(), 6U);
  EXPECT_EQ(j["t_eq"]["f_vector"], flowtri::Json::parse("[1,6,6]"));
  EXPECT_EQ(j["h_vector"], flowtri::Json::parse("[1,4,1,0]"));
  EXPECT_EQ(j["verdict"], "pass");
}

TEST(Cli, EquatorialD3Exhaustive) {
  const auto j = json_of(run("equatorial " + data("d3.json") + " --exhaustive-dkk"));
  EXPECT_EQ(j["dkk_comparison"]["summary"], "not a DKK triangulation");
}

TEST(Cli, EquatorialExhaustiveBound) {
  const auto r = run("equatorial " + data("d3.json") + " --exhaustive-dkk --exhaustive-bound 5");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json_of(r)["error"], "exhaustive bound exceeded");
}

TEST(Cli, EquatorialUnbalancedExitsOne) {
  const auto r = run("equatorial " + data("unbalanced.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json_of(r)["error"], "not Gorenstein");
}

TEST(Cli, QuotientReports) {
  const auto d1 = json_of(run("quotient " + data("d1.json")));
  EXPECT_EQ(d1["dimension"], 1);
  EXPECT_EQ(d1["facets"].size(), 2U);
  EXPECT_TRUE(d1["reflexive"]["ok"]);
  const auto d3 = json_of(run("quotient " + data("d3.json")));
  EXPECT_EQ(d3["vertices"].size(), 6U);
  EXPECT_EQ(d3["facets"].size(), 6U);
  EXPECT_EQ(d3["transversal_identity"]["failures"], 0);
  const auto g3 = run("quotient " + data("g3.json"));
  EXPECT_EQ(g3.code, 0);
  EXPECT_EQ(json_of(g3)["dimension"], 0);
}

TEST(Cli, OrderMatches) {
  for (const auto& name : {"d1.json", "d2.json", "g3.json", "skew_pair.json"}) {
    const auto r = run(std::string("order ") + data(name));
    EXPECT_EQ(r.code, 0) << name;
    EXPECT_EQ(json_of(r)["verdict"], "match") << name;
  }
}

TEST(Cli, OrderNonPlanarExitsTwo) {
  EXPECT_EQ(run("order " + data("d1.json") + " --embedding " + data("nonplanar_embedding.json")).code, 2);
}

TEST(Cli, DecomposeWithFileOrder) {
  const auto path = temp_file("decomp.json", R"([["b","d"],["a","c"]])");
  const auto j = json_of(run("dkk " + data("d1.json") + " --decomposition " + path));
  EXPECT_EQ(j["framing_source"], "decomposition");
  EXPECT_EQ(j["simplex_count"], 2);
  EXPECT_EQ(json_of(run("dkk " + data("d1.json")))["framing_source"], "planar");
}

TEST(Cli, ReRunsAreByteIdentical) {
  for (const auto& cmd : {"analyze", "decompose", "dkk", "equatorial", "quotient", "order"}) {
    const auto a = run(std::string(cmd) + " " + data("skew_pair.json"));
    const auto b = run(std::string(cmd) + " " + data("skew_pair.json"));
    EXPECT_EQ(a.code, 0) << cmd;
    EXPECT_EQ(a.out, b.out) << cmd;
  }
  EXPECT_EQ(run("fuzz --seed 3 --count 20").out, run("fuzz --seed 3 --count 20").out);
}

TEST(Cli, TextFormat) {
  const auto r = run("analyze " + data("d1.json") + " --format text");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dimension: 2"), std::string::npos);
}

TEST(Cli, FuzzFindsNoDiscrepancies) {
  const auto r = run("fuzz --seed 5 --count 50 --max-edges 7");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["discrepancies"].size(), 0U);
}

TEST(Commands, LibraryEntryMatchesBinary) {
  std::ifstream in(data("d2.json"));
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto result = flowtri::run_command("analyze", {text, std::nullopt, std::nullopt}, {});
  EXPECT_EQ(result.report.dump(2) + "\n", run("analyze " + data("d2.json")).out);
}
