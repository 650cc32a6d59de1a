#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"

using namespace axlab;
using namespace axlab::cli;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "axlab_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string generate(const std::string& recipe, const std::string& name) {
  const auto path = scratch(name).string();
  std::ostringstream out, err;
  EXPECT_EQ(cmd_generate(recipe, path, out, err), 0) << err.str();
  return path;
}

}  // namespace

TEST(Cli, GenerateReportsCounts) {
  std::ostringstream out, err;
  const auto path = scratch("poc5.txt").string();
  ASSERT_EQ(cmd_generate(R"({"components":[{"kind":"pair_of_cliques","n":5}]})", path, out, err), 0);
  EXPECT_EQ(out.str(), "vertices 10 edges 21\n");
  EXPECT_EQ(read_edge_list_file(path), pair_of_cliques(5));

  std::ostringstream o2, e2;
  ASSERT_EQ(cmd_generate(R"({"components":[{"kind":"ikc_fig","figure":"N3"}]})", scratch("n3.txt").string(), o2, e2), 0)
      << e2.str();
  EXPECT_EQ(o2.str(), "vertices 12 edges 11\n");

  std::ostringstream o3, e3;
  ASSERT_EQ(cmd_generate(R"({"components":[{"kind":"ring_of_cliques","m":30,"n":5}]})", "-", o3, e3), 0);
  EXPECT_EQ(o3.str().substr(0, 6), "n 150\n");
}

TEST(Cli, GenerateRejectsBadRecipes) {
  std::ostringstream out, err;
  EXPECT_NE(cmd_generate(R"({"components":[{"kind":"nope"}]})", "-", out, err), 0);
  EXPECT_NE(err.str().find("error"), std::string::npos);
}

TEST(Cli, ClusterCpmOnPairOfCliques) {
  const auto g = generate(R"({"components":[{"kind":"pair_of_cliques","n":5}]})", "poc5b.txt");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_cluster(R"({"kind":"cpm_opt","gamma":"1/2"})", g, RunConfig{}, out, err), 0) << err.str();
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j["result"]["clusterings"].dump(), "[[[0,1,2,3,4],[5,6,7,8,9]]]");
  EXPECT_EQ(rational_from_json(j["result"]["value"]), 10);
}

TEST(Cli, ClusterDeterministicMethods) {
  const auto g = generate(R"({"components":[{"kind":"ikc_fig","figure":"N1"}]})", "n1.txt");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_cluster(R"({"kind":"ikc"})", g, RunConfig{}, out, err), 0);
  EXPECT_EQ(nlohmann::json::parse(out.str())["result"]["clusterings"][0].size(), 2u);
  std::ostringstream o2, e2;
  ASSERT_EQ(cmd_cluster(R"({"kind":"nodes"})", g, RunConfig{}, o2, e2), 0);
  EXPECT_EQ(nlohmann::json::parse(o2.str())["result"]["clusterings"][0].size(), 8u);
}

TEST(Cli, ClusterRefusalNamesTheComponent) {
  const auto g = generate(R"({"components":[{"kind":"path","n":14}]})", "p14.txt");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_cluster(R"({"kind":"modularity"})", g, RunConfig{}, out, err), 1);
  EXPECT_NE(err.str().find("solver refused"), std::string::npos);
  EXPECT_NE(err.str().find("14"), std::string::npos);
  RunConfig wide;
  wide.limit_vertices = 14;
  std::ostringstream o2, e2;
  EXPECT_EQ(cmd_cluster(R"({"kind":"modularity"})", g, wide, o2, e2), 0) << e2.str();
}

TEST(Cli, ScoreUsesGammaForCpm) {
  const auto g = generate(R"({"components":[{"kind":"pair_of_cliques","n":4}]})", "poc4.txt");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_score(g, "[[0,1,2,3],[4,5,6,7]]", RunConfig{}, out, err), 0);
  EXPECT_EQ(rational_from_json(nlohmann::json::parse(out.str())["total"]), Rational(12, 13) - Rational(1, 2));
  RunConfig cpm;
  cpm.gammas = {"1/2"};
  std::ostringstream o2, e2;
  ASSERT_EQ(cmd_score(g, "[[0,1,2,3],[4,5,6,7]]", cpm, o2, e2), 0);
  EXPECT_EQ(rational_from_json(nlohmann::json::parse(o2.str())["total"]), 6);
  std::ostringstream o3, e3;
  EXPECT_EQ(cmd_score(g, "[[0,1,2,3]]", RunConfig{}, o3, e3), 1);
}

TEST(Cli, MincutAndKcore) {
  const auto g = generate(R"({"components":[{"kind":"pair_of_cliques","n":4},{"kind":"edge_pair"}]})", "poc4e.txt");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_mincut(g, std::string("[[0,1,2,3,4,5,6,7],[0,1,2,3],[8,9],[0,8]]"), out, err), 0) << err.str();
  const auto cuts = nlohmann::json::parse(out.str());
  EXPECT_EQ(cuts[0]["min_cut"], 1);
  EXPECT_EQ(cuts[1]["min_cut"], 3);
  EXPECT_EQ(cuts[2]["min_cut"], 1);
  EXPECT_EQ(cuts[3]["min_cut"], 0);
  std::ostringstream o2, e2;
  ASSERT_EQ(cmd_kcore(g, std::nullopt, o2, e2), 0);
  const auto core = nlohmann::json::parse(o2.str());
  EXPECT_EQ(core["degeneracy"], 3);
  EXPECT_EQ(core["cores"].dump(), "[[0,1,2,3,4,5,6,7]]");
  std::ostringstream o3, e3;
  ASSERT_EQ(cmd_kcore(g, std::size_t{1}, o3, e3), 0);
  EXPECT_EQ(nlohmann::json::parse(o3.str())["cores"].size(), 2u);
}

TEST(Cli, CheckAndReplay) {
  RunConfig rc;
  std::ostringstream out, err;
  ASSERT_EQ(cmd_check(R"({"kind":"modularity"})", "standard_consistency", rc, out, err), 0) << err.str();
  const auto v = nlohmann::json::parse(out.str());
  EXPECT_EQ(v["outcome"], "counterexample_found");
  const auto path = scratch("verdict.json");
  std::ofstream(path) << out.str();
  std::ostringstream o2, e2;
  EXPECT_EQ(cmd_replay(path.string(), o2, e2), 0) << o2.str() << e2.str();

  std::ostringstream o3, e3;
  ASSERT_EQ(cmd_check(R"({"kind":"cpm","gamma":"1/3"})", "connectivity", rc, o3, e3), 0);
  EXPECT_EQ(nlohmann::json::parse(o3.str())["outcome"], "pass_all_probes");

  std::ostringstream o4, e4;
  ASSERT_EQ(cmd_check(R"({"kind":"ikc"})", "fixed_point", rc, o4, e4), 0);
  EXPECT_EQ(nlohmann::json::parse(o4.str())["outcome"], "counterexample_found");

  std::ostringstream o5, e5;
  EXPECT_EQ(cmd_check(R"({"kind":"ikc"})", "scale_invariance", rc, o5, e5), 1);
}

TEST(Cli, BareMethodNames) {
  RunConfig rc;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_check("cpm", "connectivity", rc, out, err), 1);
  EXPECT_NE(err.str().find("cpm needs a gamma"), std::string::npos);
  rc.gammas = {"1/3"};
  std::ostringstream o2, e2;
  ASSERT_EQ(cmd_check("cpm", "connectivity", rc, o2, e2), 0) << e2.str();
  EXPECT_EQ(nlohmann::json::parse(o2.str())["method"]["gamma"], "1/3");
  std::ostringstream o3, e3;
  ASSERT_EQ(cmd_check("ikc_no_mod", "fixed_point", rc, o3, e3), 0) << e3.str();
  EXPECT_EQ(nlohmann::json::parse(o3.str())["outcome"], "pass_all_probes");
}

TEST(Cli, TableWritesReplayableEvidence) {
  const auto dir = scratch("evidence");
  std::filesystem::remove_all(dir);
  RunConfig rc;
  rc.format = Format::markdown;
  std::ostringstream out, err;
  ASSERT_EQ(cmd_table(rc, dir.string(), out, err), 0) << out.str() << err.str();
  EXPECT_NE(out.str().find("[evidence]("), std::string::npos);
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (name.find("__") == std::string::npos) continue;
    ++files;
    std::ostringstream o, e;
    EXPECT_EQ(cmd_replay(entry.path().string(), o, e), 0) << name << "\n" << o.str() << e.str();
  }
  EXPECT_EQ(files, 42u);
  EXPECT_TRUE(std::filesystem::exists(dir / "table.md"));
  EXPECT_TRUE(std::filesystem::exists(dir / "table.json"));
}

TEST(Cli, TableOutputIsByteIdentical) {
  RunConfig rc;
  std::ostringstream a, b, e1, e2;
  cmd_table(rc, std::nullopt, a, e1);
  cmd_table(rc, std::nullopt, b, e2);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Cli, ConfiguredMethodAppliesFlags) {
  RunConfig rc;
  rc.gammas = {"1/10"};
  rc.k0 = 3;
  rc.limit_vertices = 9;
  EXPECT_EQ(configured_method(nlohmann::json::parse(R"({"kind":"cpm","gamma":"1/2"})"), rc).gamma, Rational(1, 10));
  EXPECT_EQ(configured_method(nlohmann::json::parse(R"({"kind":"ikc"})"), rc).k0, 3u);
  EXPECT_EQ(configured_method(nlohmann::json::parse(R"({"kind":"modularity"})"), rc).limits.max_component_vertices, 9u);
  const TableConfig t = table_config(rc);
  ASSERT_EQ(t.gammas.size(), 1u);
  EXPECT_EQ(t.k0, 3u);
  EXPECT_EQ(format_from_string("md"), Format::markdown);
  EXPECT_THROW(format_from_string("csv"), std::invalid_argument);
}
