#include "cfconn/report.hpp"

#include <algorithm>
#include <charconv>

namespace cfconn {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string format_report_tsv(const SearchReport& report) {
  std::string out = "key\tn";
  for (const auto& c : report.columns) out += "\t" + c;
  out += "\tstatus\n";
  for (const auto& row : report.rows) {
    out += row.key + "\t" + std::to_string(row.order);
    for (const auto& v : row.values) out += "\t" + v;
    out += row.pass ? "\tpass\n" : "\tfail\n";
  }
  if (report.extremal) {
    const auto& e = *report.extremal;
    out += "# min " + e.column + "=" + std::to_string(e.min_value) + " " + join(e.min_keys, ",") + "\n";
    out += "# max " + e.column + "=" + std::to_string(e.max_value) + " " + join(e.max_keys, ",") + "\n";
  }
  out += "checked=" + std::to_string(report.checked()) + " violations=" + std::to_string(report.violations.size()) +
         "\n";
  return out;
}

std::string format_violations(const SearchReport& report) {
  std::string out;
  for (const auto& v : report.violations) {
    out += "# violation claim=" + report.claim + " key=" + v.key + " observed=" + std::to_string(v.observed) +
           " bound=" + std::to_string(v.bound);
    if (!v.detail.empty()) out += " " + v.detail;
    out += "\n" + to_edge_list(v.graph);
  }
  return out;
}

std::optional<Extremal> summarize_extremes(const SearchReport& report, const std::string& column) {
  const auto it = std::find(report.columns.begin(), report.columns.end(), column);
  if (it == report.columns.end()) return std::nullopt;
  const auto idx = static_cast<std::size_t>(it - report.columns.begin());
  std::optional<Extremal> out;
  for (const auto& row : report.rows) {
    const std::string& text = row.values.at(idx);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) continue;
    if (!out) {
      out = Extremal{column, value, {row.key}, value, {row.key}};
      continue;
    }
    if (value < out->min_value) {
      out->min_value = value;
      out->min_keys = {row.key};
    } else if (value == out->min_value) {
      out->min_keys.push_back(row.key);
    }
    if (value > out->max_value) {
      out->max_value = value;
      out->max_keys = {row.key};
    } else if (value == out->max_value) {
      out->max_keys.push_back(row.key);
    }
  }
  return out;
}

}  // namespace cfconn
