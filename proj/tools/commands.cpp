#include "commands.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace axlab::cli {

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

Graph load_graph(const std::string& path) { return read_edge_list_file(path); }

// A bare kind name such as "cpm" stands for {"kind": "cpm"}.
nlohmann::json load_method(const std::string& text) {
  if (!text.empty() && std::isalpha(static_cast<unsigned char>(text.front())) && !std::filesystem::exists(text)) {
    return {{"kind", text}};
  }
  return load_json(text);
}

nlohmann::json scored(const Graph& g, const Clustering& c, const std::optional<Objective>& objective) {
  return score_to_json(score(g, c, objective.value_or(Objective::modularity())));
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const SolverRefusal& e) {
    err << "solver refused: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace

Format format_from_string(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "markdown" || name == "md") return Format::markdown;
  throw std::invalid_argument("unknown format: " + name);
}

nlohmann::json load_json(const std::string& text_or_path) {
  const auto first = text_or_path.find_first_not_of(" \t\n");
  if (first != std::string::npos && (text_or_path[first] == '{' || text_or_path[first] == '[')) {
    return nlohmann::json::parse(text_or_path);
  }
  return nlohmann::json::parse(read_text(text_or_path));
}

TableConfig table_config(const RunConfig& rc) {
  TableConfig t;
  t.seed = rc.seed;
  t.budget = rc.budget;
  t.limit_vertices = rc.limit_vertices;
  if (rc.k0) t.k0 = *rc.k0;
  if (!rc.gammas.empty()) {
    t.gammas.clear();
    for (const auto& g : rc.gammas) t.gammas.push_back(parse_rational(g));
  }
  return t;
}

MethodSpec configured_method(const nlohmann::json& method, const RunConfig& rc) {
  nlohmann::json j = method;
  if (j.is_object() && !j.contains("gamma") && !rc.gammas.empty()) j["gamma"] = rc.gammas.front();
  MethodSpec m = method_from_json(j);
  if (m.kind == MethodSpec::Kind::cpm_opt && !rc.gammas.empty()) m.gamma = parse_rational(rc.gammas.front());
  if (m.kind == MethodSpec::Kind::ikc && rc.k0) m.k0 = *rc.k0;
  m.limits.max_component_vertices = rc.limit_vertices;
  return m;
}

int cmd_generate(const std::string& recipe, const std::string& out_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = build(recipe_from_json(load_json(recipe)));
    if (out_path.empty() || out_path == "-") {
      write_edge_list(out, g);
    } else {
      write_text(out_path, to_edge_list(g));
      out << "vertices " << g.vertex_count() << " edges " << g.edge_count() << '\n';
    }
    return 0;
  });
}

int cmd_cluster(const std::string& method, const std::string& graph_path, const RunConfig& rc, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const MethodSpec m = configured_method(load_method(method), rc);
    const Graph g = load_graph(graph_path);
    const OptimaSet result = run_method(m, g);
    nlohmann::json scores = nlohmann::json::array();
    for (const auto& c : result.clusterings) scores.push_back(scored(g, c, result.objective));
    nlohmann::json report = {{"method", method_to_json(m)}, {"result", optima_to_json(result)}, {"scores", scores}};
    out << report.dump(2) << '\n';
    return 0;
  });
}

int cmd_score(const std::string& graph_path, const std::string& clustering, const RunConfig& rc, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_graph(graph_path);
    const Clustering c = clustering_from_json(load_json(clustering));
    if (!c.is_partition_of(g.vertex_count())) throw std::invalid_argument("clustering is not a partition of the graph");
    const Objective objective =
        rc.gammas.empty() ? Objective::modularity() : Objective::cpm(parse_rational(rc.gammas.front()));
    out << score_to_json(score(g, c, objective)).dump(2) << '\n';
    return 0;
  });
}

int cmd_mincut(const std::string& graph_path, const std::optional<std::string>& sets, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_graph(graph_path);
    std::vector<VertexSet> targets;
    if (sets) {
      for (const auto& s : load_json(*sets)) targets.push_back(make_vertex_set(s.get<std::vector<Vertex>>()));
    } else {
      VertexSet all;
      for (std::size_t v = 0; v < g.vertex_count(); ++v) all.push_back(static_cast<Vertex>(v));
      targets.push_back(std::move(all));
    }
    nlohmann::json report = nlohmann::json::array();
    for (const auto& s : targets) {
      nlohmann::json row = {{"set", s}, {"size", s.size()}};
      if (s.size() < 2) {
        row["min_cut"] = nullptr;
      } else if (!is_connected_subset(g, s)) {
        row["min_cut"] = 0;
      } else {
        row["min_cut"] = min_cut(g, s);
      }
      report.push_back(row);
    }
    out << report.dump(2) << '\n';
    return 0;
  });
}

int cmd_kcore(const std::string& graph_path, std::optional<std::size_t> k, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_graph(graph_path);
    const std::size_t d = degeneracy(g);
    const std::size_t level = k.value_or(d);
    nlohmann::json report = {{"degeneracy", d}, {"k", level}, {"cores", k_core(g, level)}};
    out << report.dump(2) << '\n';
    return 0;
  });
}

int cmd_check(const std::string& method, const std::string& axiom, const RunConfig& rc, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const MethodSpec m = configured_method(load_method(method), rc);
    const AxiomVerdict v = run_cell(m, axiom_from_string(axiom), table_config(rc));
    if (rc.format == Format::markdown) {
      out << "- " << m.name() << " / " << to_string(v.axiom) << ": " << to_string(v.outcome) << " (" << v.probes
          << " probes) " << v.summary << '\n';
    } else {
      out << verdict_to_json(v).dump(2) << '\n';
    }
    if (v.outcome == Outcome::inconclusive) err << "inconclusive: " << v.summary << '\n';
    return 0;
  });
}

int cmd_replay(const std::string& verdict, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const nlohmann::json doc = load_json(verdict);
    std::vector<AxiomVerdict> verdicts;
    if (doc.contains("verdicts")) {
      for (const auto& v : doc.at("verdicts")) verdicts.push_back(verdict_from_json(v));
    } else {
      verdicts.push_back(verdict_from_json(doc));
    }
    int code = 0;
    for (const auto& v : verdicts) {
      const std::string problem = replay_verdict(v);
      out << v.method.name() << " / " << to_string(v.axiom) << " / " << to_string(v.outcome) << ": "
          << (problem.empty() ? "reproduced" : problem) << '\n';
      if (!problem.empty()) code = 1;
    }
    return code;
  });
}

int cmd_table(const RunConfig& rc, const std::optional<std::string>& evidence_dir, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const TableReport report = run_table(table_config(rc));
    const std::string markdown = render_markdown(report, evidence_dir.has_value());
    const nlohmann::json json = table_to_json(report);
    if (evidence_dir) {
      const std::filesystem::path dir(*evidence_dir);
      std::filesystem::create_directories(dir);
      for (const auto& cell : report.cells) {
        nlohmann::json verdicts = nlohmann::json::array();
        for (const auto& v : cell.verdicts) verdicts.push_back(verdict_to_json(v));
        const nlohmann::json doc = {{"method", cell.row},
                                    {"axiom", to_string(cell.axiom)},
                                    {"status", to_string(cell.status)},
                                    {"verdicts", verdicts}};
        write_text(dir / evidence_file_name(cell), doc.dump(2) + "\n");
      }
      write_text(dir / "table.md", markdown);
      write_text(dir / "table.json", json.dump(2) + "\n");
    }
    if (rc.format == Format::markdown) {
      out << markdown;
    } else {
      out << json.dump(2) << '\n';
    }
    return table_exit_code(report);
  });
}

}  // namespace axlab::cli
