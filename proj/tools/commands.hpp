#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "axlab/suite.hpp"

namespace axlab::cli {

enum class Format { json, markdown };

Format format_from_string(const std::string& name);

/// Options shared by every subcommand.
struct RunConfig {
  std::uint64_t seed = 1;
  std::size_t limit_vertices = 12;
  std::vector<std::string> gammas;
  std::optional<std::size_t> k0;
  std::size_t budget = 200;
  Format format = Format::json;
};

/// Reads a JSON document given inline (starting with '{' or '[') or as a path.
nlohmann::json load_json(const std::string& text_or_path);

TableConfig table_config(const RunConfig& rc);
/// Applies --gamma, --k0 and --limit-vertices on top of a parsed method.
MethodSpec configured_method(const nlohmann::json& method, const RunConfig& rc);

// Each command writes its report to `out`, diagnostics to `err`, and returns
// the process exit code.

int cmd_generate(const std::string& recipe, const std::string& out_path, std::ostream& out, std::ostream& err);
int cmd_cluster(const std::string& method, const std::string& graph_path, const RunConfig& rc, std::ostream& out,
                std::ostream& err);
/// Modularity unless a --gamma is given, in which case CPM at that resolution.
int cmd_score(const std::string& graph_path, const std::string& clustering, const RunConfig& rc, std::ostream& out,
              std::ostream& err);
/// Min cut of the whole graph, or of each listed vertex set.
int cmd_mincut(const std::string& graph_path, const std::optional<std::string>& sets, std::ostream& out,
               std::ostream& err);
/// k-core components; without k, the cores at the degeneracy.
int cmd_kcore(const std::string& graph_path, std::optional<std::size_t> k, std::ostream& out, std::ostream& err);
int cmd_check(const std::string& method, const std::string& axiom, const RunConfig& rc, std::ostream& out,
              std::ostream& err);
/// Exit 0 when the recorded evidence reproduces, 1 otherwise.
int cmd_replay(const std::string& verdict, std::ostream& out, std::ostream& err);
int cmd_table(const RunConfig& rc, const std::optional<std::string>& evidence_dir, std::ostream& out,
              std::ostream& err);

}  // namespace axlab::cli
