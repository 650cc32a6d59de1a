#include "axlab/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "axlab/random.hpp"

namespace axlab {

namespace {

std::vector<ProbeNetwork> fuzz_probes(const TableConfig& config, std::uint64_t stream) {
  std::vector<ProbeNetwork> out;
  const auto graphs = fuzz_graphs(derive_seed(config.seed, stream), config.fuzz_graphs, config.fuzz_vertices);
  for (std::size_t i = 0; i < graphs.size(); ++i) out.push_back(ProbeNetwork::of("fuzz#" + std::to_string(i), graphs[i]));
  return out;
}

ProbeNetwork figure(IkcFigure f) { return ProbeNetwork::of(to_string(f), NetworkRecipe{{ComponentRecipe::ikc_fig(f)}}); }

ScriptedProbe figure_probe(IkcFigure base, IkcFigure perturbed) {
  return {to_string(base) + " -> " + to_string(perturbed), figure(base), figure(perturbed)};
}

ScriptedProbe star_to_clique_probe() {
  return {"star context -> clique context (e = 15)",
          ProbeNetwork::of("star_context(15)", context_recipe(ContextVariant::star_context, 15)),
          ProbeNetwork::of("clique_context(15)", context_recipe(ContextVariant::clique_context, 15))};
}

ScriptedProbe bridge_removal_probe() {
  using C = ComponentRecipe;
  return {"bridged modules -> bridge removed (e = 3)",
          ProbeNetwork::of("pair_of_cliques(3) + bridged_modules(9, 8)",
                           NetworkRecipe{{C::pair_of_cliques(3), C::bridged_modules(9, 8)}}),
          ProbeNetwork::of("pair_of_cliques(3) + modules(9) + modules(8)",
                           NetworkRecipe{{C::pair_of_cliques(3), C::edge_budget_module(9), C::edge_budget_module(8)}})};
}

bool is_ikc(const MethodSpec& m) { return m.kind == MethodSpec::Kind::ikc; }
bool is_modularity(const MethodSpec& m) { return m.kind == MethodSpec::Kind::modularity_opt; }
bool is_cpm(const MethodSpec& m) { return m.kind == MethodSpec::Kind::cpm_opt; }

std::vector<std::size_t> iota(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> out;
  for (std::size_t i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

AxiomVerdict consistency_cell(const MethodSpec& m, ConsistencyMode mode, const TableConfig& config) {
  std::vector<AxiomVerdict> parts;
  if (is_ikc(m)) {
    switch (mode) {
      case ConsistencyMode::standard:
        parts.push_back(check_consistency_scripted(m, figure_probe(IkcFigure::n1, IkcFigure::n1_prime), mode));
        break;
      case ConsistencyMode::refinement:
        parts.push_back(check_consistency_scripted(m, figure_probe(IkcFigure::n2, IkcFigure::n2_prime), mode));
        break;
      case ConsistencyMode::interedge:
        parts.push_back(check_consistency_scripted(m, figure_probe(IkcFigure::n3, IkcFigure::n3_prime), mode));
        break;
    }
  }
  if (is_modularity(m)) {
    parts.push_back(check_consistency_scripted(
        m, mode == ConsistencyMode::interedge ? bridge_removal_probe() : star_to_clique_probe(), mode));
  }
  ProbeBudget budget;
  budget.probes = config.budget;
  budget.seed = derive_seed(config.seed, 1000 + static_cast<std::uint64_t>(mode));
  parts.push_back(check_consistency(m, fuzz_probes(config, 10 + static_cast<std::uint64_t>(mode)), mode, budget));
  return combine_verdicts(axiom_for(mode), m, parts);
}

AxiomVerdict connectivity_cell(const MethodSpec& m, const TableConfig& config) {
  std::vector<ProbeNetwork> samples = {
      ProbeNetwork::of("path(9) + edge", NetworkRecipe{{ComponentRecipe::path(9), ComponentRecipe::edge_pair()}}),
      ProbeNetwork::of("pair_of_cliques(4) + edge",
                       NetworkRecipe{{ComponentRecipe::pair_of_cliques(4), ComponentRecipe::edge_pair()}}),
  };
  if (is_modularity(m)) {
    samples.insert(samples.begin(),
                   ProbeNetwork::of("clique_context(15)", context_recipe(ContextVariant::clique_context, 15)));
  }
  for (auto& p : fuzz_probes(config, 20)) samples.push_back(std::move(p));
  const ConnectivityFunction f = is_cpm(m) ? cpm_connectivity_function(m.gamma) : reference_connectivity_function();
  return check_connectivity(m, f, samples, CutComparison::strict);
}

AxiomVerdict pair_of_cliques_cell(const MethodSpec& m) {
  const NetworkRecipe edge{{ComponentRecipe::edge_pair()}};
  if (is_cpm(m)) return check_pair_of_cliques(m, iota(2, 6), edge, cpm_pair_of_cliques_threshold(m.gamma));
  std::vector<AxiomVerdict> parts;
  if (is_modularity(m)) parts.push_back(check_pair_of_cliques_clique_context(m, {6, 7}));
  parts.push_back(check_pair_of_cliques(m, iota(2, 6), edge));
  return combine_verdicts(Axiom::pair_of_cliques, m, parts);
}

AxiomVerdict fixed_point_cell(const MethodSpec& m, const TableConfig& config) {
  std::vector<ProbeNetwork> samples;
  if (is_modularity(m)) {
    samples.push_back(ProbeNetwork::of("ring_of_cliques(23, 5)", NetworkRecipe{{ComponentRecipe::ring_of_cliques(23, 5)}}));
  }
  if (is_ikc(m)) {
    for (IkcFigure f : {IkcFigure::n1, IkcFigure::n2, IkcFigure::n3}) samples.push_back(figure(f));
  }
  for (auto& p : fuzz_probes(config, 30)) samples.push_back(std::move(p));
  return check_fixed_point(m, samples, config.subset_budget, derive_seed(config.seed, 31));
}

}  // namespace

nlohmann::json table_config_to_json(const TableConfig& c) {
  nlohmann::json gammas = nlohmann::json::array();
  for (const auto& g : c.gammas) gammas.push_back(to_string(g));
  return {{"seed", c.seed},
          {"budget", c.budget},
          {"gammas", gammas},
          {"fuzz_vertices", c.fuzz_vertices},
          {"fuzz_graphs", c.fuzz_graphs},
          {"richness_samples", c.richness_samples},
          {"subset_budget", c.subset_budget},
          {"limit_vertices", c.limit_vertices},
          {"k0", c.k0}};
}

std::size_t effective_threads(std::size_t requested) {
  std::size_t n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("AXLAB_THREADS")) {
    try {
      const auto limit = static_cast<std::size_t>(std::stoul(cap));
      if (limit > 0) n = std::min(n, limit);
    } catch (const std::exception&) {
    }
  }
  return std::max<std::size_t>(n, 1);
}

AxiomVerdict run_cell(const MethodSpec& method, Axiom axiom, const TableConfig& config) {
  MethodSpec m = method;
  m.limits.max_component_vertices = config.limit_vertices;
  switch (axiom) {
    case Axiom::richness:
      return check_richness(m, richness_samples(derive_seed(config.seed, 40), config.richness_samples, 8), 4);
    case Axiom::standard_consistency: return consistency_cell(m, ConsistencyMode::standard, config);
    case Axiom::refinement_consistency: return consistency_cell(m, ConsistencyMode::refinement, config);
    case Axiom::interedge_consistency: return consistency_cell(m, ConsistencyMode::interedge, config);
    case Axiom::connectivity: return connectivity_cell(m, config);
    case Axiom::pair_of_cliques: return pair_of_cliques_cell(m);
    case Axiom::fixed_point: return fixed_point_cell(m, config);
  }
  throw std::logic_error("unhandled axiom");
}

std::string to_string(CellStatus s) {
  switch (s) {
    case CellStatus::consistent: return "consistent";
    case CellStatus::contradiction: return "contradiction";
    case CellStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<TableRow> table_rows(const TableConfig& config) {
  using E = Expectation;
  constexpr E s = E::satisfies;
  constexpr E v = E::violates;
  std::vector<MethodSpec> cpm;
  for (const auto& g : config.gammas) cpm.push_back(MethodSpec::cpm(g));
  return {
      {"Components", {MethodSpec::components()}, {s, s, s, s, v, v, s}},
      {"Nodes", {MethodSpec::nodes()}, {v, s, s, s, s, v, s}},
      {"CPM", cpm, {s, s, s, s, s, s, s}},
      {"Modularity", {MethodSpec::modularity()}, {s, v, v, v, v, v, v}},
      {"IKC", {MethodSpec::ikc(config.k0, true)}, {v, v, v, v, v, v, v}},
      {"IKC(no-mod)", {MethodSpec::ikc(config.k0, false)}, {s, v, v, s, v, v, s}},
  };
}

CellStatus judge_cell(Expectation expected, const std::vector<AxiomVerdict>& verdicts) {
  bool open = verdicts.empty();
  for (const auto& v : verdicts) {
    if (v.outcome == Outcome::inconclusive) {
      open = true;
      continue;
    }
    const bool agrees = expected == Expectation::satisfies ? supports_axiom(v.outcome) : refutes_axiom(v.outcome);
    if (!agrees) return CellStatus::contradiction;
  }
  return open ? CellStatus::inconclusive : CellStatus::consistent;
}

TableReport run_table(const TableConfig& config) {
  const auto rows = table_rows(config);
  const auto& axioms = all_axioms();
  struct Job {
    std::size_t cell;
    MethodSpec method;
    Axiom axiom;
  };
  TableReport report{config, {}, {}};
  std::vector<Job> jobs;
  for (const auto& row : rows) {
    report.rows.push_back(row.name);
    for (std::size_t a = 0; a < axioms.size(); ++a) {
      TableCell cell{row.name, axioms[a], row.expected[a], {}, CellStatus::inconclusive};
      cell.verdicts.resize(row.methods.size());
      for (const auto& m : row.methods) jobs.push_back({report.cells.size(), m, axioms[a]});
      report.cells.push_back(std::move(cell));
    }
  }
  std::vector<AxiomVerdict> results(jobs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      results[i] = run_cell(jobs[i].method, jobs[i].axiom, config);
    }
  };
  const std::size_t threads = std::min(effective_threads(config.threads), jobs.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<std::size_t> filled(report.cells.size(), 0);
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto& cell = report.cells[jobs[i].cell];
    cell.verdicts[filled[jobs[i].cell]++] = std::move(results[i]);
  }
  for (auto& cell : report.cells) cell.status = judge_cell(cell.expected, cell.verdicts);
  return report;
}

std::string evidence_file_name(const TableCell& cell) {
  std::string row;
  for (char ch : cell.row) {
    if (std::isalnum(static_cast<unsigned char>(ch))) {
      row += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    } else if (!row.empty() && row.back() != '_') {
      row += '_';
    }
  }
  while (!row.empty() && row.back() == '_') row.pop_back();
  return row + "__" + to_string(cell.axiom) + ".json";
}

std::string render_markdown(const TableReport& report, bool link_evidence) {
  static const std::vector<std::string> headers = {"Richness",     "Standard",        "Refinement", "Inter-edge",
                                                   "Connectivity", "Pair-of-Cliques", "Fixed Point"};
  std::ostringstream out;
  out << "| Method |";
  for (const auto& h : headers) out << ' ' << h << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < headers.size(); ++i) out << "---|";
  out << '\n';
  const std::size_t width = all_axioms().size();
  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    out << "| " << report.rows[r] << " |";
    for (std::size_t a = 0; a < width; ++a) {
      const auto& cell = report.cells[r * width + a];
      std::string mark = cell.expected == Expectation::satisfies ? "✓" : "−";
      if (cell.status == CellStatus::contradiction) mark = "✗ " + mark + " expected";
      if (cell.status == CellStatus::inconclusive) mark = "? " + mark + " expected";
      std::string detail;
      for (const auto& v : cell.verdicts) {
        if (!detail.empty()) detail += ", ";
        detail += to_string(v.outcome);
      }
      out << ' ' << mark << " (" << detail << ")";
      if (link_evidence) out << " [evidence](" << evidence_file_name(cell) << ")";
      out << " |";
    }
    out << '\n';
  }
  std::size_t consistent = 0;
  for (const auto& cell : report.cells) consistent += cell.status == CellStatus::consistent ? 1 : 0;
  out << '\n' << consistent << " of " << report.cells.size() << " cells consistent with the expected verdicts.\n";
  for (const auto& cell : report.cells) {
    if (cell.status == CellStatus::consistent) continue;
    out << "- " << cell.row << " / " << to_string(cell.axiom) << ": " << to_string(cell.status);
    for (const auto& v : cell.verdicts) out << "; " << v.method.name() << ": " << v.summary;
    out << '\n';
  }
  return out.str();
}

nlohmann::json table_to_json(const TableReport& report) {
  nlohmann::json cells = nlohmann::json::array();
  bool all = true;
  for (const auto& cell : report.cells) {
    nlohmann::json verdicts = nlohmann::json::array();
    for (const auto& v : cell.verdicts) verdicts.push_back(verdict_to_json(v));
    cells.push_back({{"method", cell.row},
                     {"axiom", to_string(cell.axiom)},
                     {"expected", cell.expected == Expectation::satisfies ? "satisfies" : "violates"},
                     {"status", to_string(cell.status)},
                     {"verdicts", verdicts}});
    all = all && cell.status == CellStatus::consistent;
  }
  return {{"config", table_config_to_json(report.config)}, {"cells", cells}, {"all_consistent", all}};
}

int table_exit_code(const TableReport& report) {
  bool open = false;
  for (const auto& cell : report.cells) {
    if (cell.status == CellStatus::contradiction) return 2;
    open = open || cell.status == CellStatus::inconclusive;
  }
  return open ? 3 : 0;
}

}  // namespace axlab
