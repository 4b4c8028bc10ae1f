#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfconn/graph.hpp"

namespace cfconn {

struct ReportRow {
  std::string key;
  int order = 0;
  std::vector<std::string> values;  // parallel to SearchReport::columns
  bool pass = true;
};

struct Violation {
  std::string key;
  Graph graph;
  int observed = 0;
  int bound = 0;
  std::string detail;
};

/// Graphs attaining the minimum and maximum of one scanned column.
struct Extremal {
  std::string column;
  int min_value = 0;
  std::vector<std::string> min_keys;
  int max_value = 0;
  std::vector<std::string> max_keys;
};

/// Outcome of one exhaustive sweep over a catalog at a fixed order.
struct SearchReport {
  std::string claim;
  int order = 0;
  std::vector<std::string> columns;
  std::vector<ReportRow> rows;  // canonical-key order
  std::vector<Violation> violations;
  std::optional<Extremal> extremal;

  int checked() const { return static_cast<int>(rows.size()); }
  bool holds() const { return violations.empty(); }
};

/// TSV: header "key n <columns> status", one row per class, "# min"/"# max"
/// extremal comments when present, and the footer
/// "checked=<c> violations=<v>".
std::string format_report_tsv(const SearchReport& report);

/// Each violation as a "# violation ..." comment followed by the witness in
/// edge-list format.
std::string format_violations(const SearchReport& report);

/// Builds the extremal summary for integer column `column` over all rows.
/// Rows whose value is not an integer are skipped.
std::optional<Extremal> summarize_extremes(const SearchReport& report, const std::string& column);

}  // namespace cfconn
