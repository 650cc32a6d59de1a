#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "axlab/axioms.hpp"

namespace axlab {

struct TableConfig {
  std::uint64_t seed = 1;
  /// Probe budget per consistency check.
  std::size_t budget = 200;
  std::vector<Rational> gammas = {Rational(1, 10), Rational(1, 3), Rational(1, 2)};
  std::size_t fuzz_vertices = 10;
  std::size_t fuzz_graphs = 10;
  std::size_t richness_samples = 20;
  std::size_t subset_budget = 4;
  std::size_t limit_vertices = 12;
  std::size_t k0 = 0;
  /// 0 picks the hardware concurrency, capped by AXLAB_THREADS.
  std::size_t threads = 0;
};

nlohmann::json table_config_to_json(const TableConfig& c);

/// Thread count after applying the AXLAB_THREADS cap.
std::size_t effective_threads(std::size_t requested);

/// Runs the full battery of probes for one method and axiom.
AxiomVerdict run_cell(const MethodSpec& m, Axiom axiom, const TableConfig& config);

enum class Expectation { satisfies, violates };
enum class CellStatus { consistent, contradiction, inconclusive };

std::string to_string(CellStatus s);

struct TableRow {
  std::string name;
  /// One method per row, except the CPM row which holds one per resolution.
  std::vector<MethodSpec> methods;
  std::vector<Expectation> expected;  // indexed like all_axioms()
};

/// The six methods in table order with their expected verdicts.
std::vector<TableRow> table_rows(const TableConfig& config);

struct TableCell {
  std::string row;
  Axiom axiom = Axiom::richness;
  Expectation expected = Expectation::satisfies;
  std::vector<AxiomVerdict> verdicts;
  CellStatus status = CellStatus::inconclusive;
};

struct TableReport {
  TableConfig config;
  std::vector<std::string> rows;
  std::vector<TableCell> cells;  // row-major, axioms in all_axioms() order
};

CellStatus judge_cell(Expectation expected, const std::vector<AxiomVerdict>& verdicts);

TableReport run_table(const TableConfig& config);

/// Evidence file name for a cell, e.g. "cpm__richness.json".
std::string evidence_file_name(const TableCell& cell);

std::string render_markdown(const TableReport& report, bool link_evidence = false);
nlohmann::json table_to_json(const TableReport& report);

/// 0 when every cell is consistent, 2 on any contradiction, 3 when cells are
/// inconclusive but none contradict.
int table_exit_code(const TableReport& report);

}  // namespace axlab
