#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

void add_common(CLI::App* cmd, axlab::cli::RunConfig& rc, std::string& format) {
  cmd->add_option("--seed", rc.seed, "Seed for every random choice");
  cmd->add_option("--limit-vertices", rc.limit_vertices, "Largest component the brute-force solver enumerates")
      ->check(CLI::Range(1, 31));
  cmd->add_option("--gamma", rc.gammas, "CPM resolution as a fraction, e.g. 1/3 (repeatable)");
  cmd->add_option("--k0", rc.k0, "Minimum core level for IKC");
  cmd->add_option("--budget", rc.budget, "Probe budget per consistency check")->check(CLI::PositiveNumber);
  cmd->add_option("--format", format, "json or markdown")->check(CLI::IsMember({"json", "markdown", "md"}));
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = axlab::cli;
  CLI::App app{"Axiom checks for graph clustering methods"};
  app.require_subcommand(1);

  cli::RunConfig rc;
  std::string format = "json";
  std::string recipe, out_path, method, graph, clustering, axiom, replay;
  std::optional<std::string> sets, evidence_dir;
  std::optional<std::size_t> k;

  auto* generate = app.add_subcommand("generate", "Build a network from a recipe and write its edge list");
  generate->add_option("recipe", recipe, "Recipe JSON, inline or a path")->required();
  generate->add_option("-o,--out", out_path, "Output edge-list path (stdout when omitted)");

  auto* cluster = app.add_subcommand("cluster", "Run a method on an edge-list graph");
  cluster->add_option("method", method, "Method JSON, inline or a path")->required();
  cluster->add_option("graph", graph, "Edge-list path")->required();

  auto* score = app.add_subcommand("score", "Score a clustering (modularity, or CPM with --gamma)");
  score->add_option("graph", graph, "Edge-list path")->required();
  score->add_option("clustering", clustering, "Clustering JSON, inline or a path")->required();

  auto* mincut = app.add_subcommand("mincut", "Minimum edge cut of the graph or of given vertex sets");
  mincut->add_option("graph", graph, "Edge-list path")->required();
  mincut->add_option("--sets", sets, "JSON list of vertex sets");

  auto* kcore = app.add_subcommand("kcore", "Connected k-cores");
  kcore->add_option("graph", graph, "Edge-list path")->required();
  kcore->add_option("-k", k, "Core level (degeneracy when omitted)");

  auto* check = app.add_subcommand("check", "Check one method against one axiom, or replay a verdict");
  check->add_option("method", method, "Method JSON, inline or a path");
  check->add_option("axiom", axiom, "Axiom name, e.g. standard_consistency");
  check->add_option("--replay", replay, "Verdict or evidence file to re-verify");

  auto* table = app.add_subcommand("table", "Run every method against every axiom");
  table->add_option("--evidence-dir", evidence_dir, "Directory for per-cell evidence files");

  for (auto* cmd : {generate, cluster, score, mincut, kcore, check, table}) add_common(cmd, rc, format);

  CLI11_PARSE(app, argc, argv);
  rc.format = cli::format_from_string(format);

  if (*generate) return cli::cmd_generate(recipe, out_path, std::cout, std::cerr);
  if (*cluster) return cli::cmd_cluster(method, graph, rc, std::cout, std::cerr);
  if (*score) return cli::cmd_score(graph, clustering, rc, std::cout, std::cerr);
  if (*mincut) return cli::cmd_mincut(graph, sets, std::cout, std::cerr);
  if (*kcore) return cli::cmd_kcore(graph, k, std::cout, std::cerr);
  if (*check) {
    if (!replay.empty()) return cli::cmd_replay(replay, std::cout, std::cerr);
    if (method.empty() || axiom.empty()) {
      std::cerr << "check needs a method and an axiom, or --replay\n";
      return 1;
    }
    return cli::cmd_check(method, axiom, rc, std::cout, std::cerr);
  }
  return cli::cmd_table(rc, evidence_dir, std::cout, std::cerr);
}
