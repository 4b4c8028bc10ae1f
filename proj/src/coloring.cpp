#include "cfconn/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "cfconn/error.hpp"

namespace cfconn {

namespace {

int count_distinct(const std::vector<int>& v) {
  return static_cast<int>(std::set<int>(v.begin(), v.end()).size());
}

std::vector<int> compress(const std::vector<int>& v) {
  std::vector<int> sorted(v);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out;
  out.reserve(v.size());
  for (int c : v) {
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin()) + 1);
  }
  return out;
}

// Splits text into lines of integer fields, skipping comments and blanks.
// Returns (line number, fields) pairs.
std::vector<std::pair<int, std::vector<int>>> read_int_rows(std::string_view text, std::size_t width) {
  std::vector<std::pair<int, std::vector<int>>> rows;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<int> fields;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
        if (ec != std::errc{} || ptr != line.data() + j) {
          throw ParseError(line_no, "expected an integer, got '" + std::string(line.substr(i, j - i)) + "'");
        }
        fields.push_back(value);
      }
      i = j;
    }
    if (fields.empty()) continue;
    if (fields.size() != width) {
      throw ParseError(line_no, "expected " + std::to_string(width) + " fields");
    }
    rows.emplace_back(line_no, std::move(fields));
  }
  return rows;
}

}  // namespace

int VertexColoring::num_colors() const { return count_distinct(colors); }
int VertexColoring::max_color() const {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}
VertexColoring VertexColoring::normalized() const { return {compress(colors)}; }

int EdgeColoring::num_colors() const { return count_distinct(colors); }
EdgeColoring EdgeColoring::normalized() const { return {compress(colors)}; }

int Ranking::num_labels() const {
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
}

int ceil_log2(long x) {
  if (x < 1) throw ValidationError("ceil_log2 requires x >= 1");
  int k = 0;
  while ((1L << k) < x) ++k;
  return k;
}

void check_domain(const Graph& g, const VertexColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.order()) {
    throw ValidationError("coloring covers " + std::to_string(c.colors.size()) + " vertices, graph has " +
                          std::to_string(g.order()));
  }
  for (int col : c.colors) {
    if (col < 1) throw ValidationError("colors must be positive integers");
  }
}

void check_domain(const Graph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.size()) {
    throw ValidationError("edge coloring covers " + std::to_string(c.colors.size()) + " edges, graph has " +
                          std::to_string(g.size()));
  }
  for (int col : c.colors) {
    if (col < 1) throw ValidationError("colors must be positive integers");
  }
}

VertexColoring parse_vertex_coloring(std::string_view text, const Graph& g) {
  VertexColoring out{std::vector<int>(static_cast<std::size_t>(g.order()), 0)};
  for (const auto& [line, f] : read_int_rows(text, 2)) {
    const int v = f[0];
    const int color = f[1];
    if (v < 0 || v >= g.order()) {
      throw ValidationError("line " + std::to_string(line) + ": vertex " + std::to_string(v) + " not in graph");
    }
    if (color < 1) throw ValidationError("line " + std::to_string(line) + ": colors must be positive");
    if (out.colors[v] != 0) {
      throw ValidationError("line " + std::to_string(line) + ": vertex " + std::to_string(v) + " colored twice");
    }
    out.colors[v] = color;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (out.colors[v] == 0) throw ValidationError("vertex " + std::to_string(v) + " has no color");
  }
  return out;
}

EdgeColoring parse_edge_coloring(std::string_view text, const Graph& g) {
  EdgeColoring out{std::vector<int>(static_cast<std::size_t>(g.size()), 0)};
  for (const auto& [line, f] : read_int_rows(text, 3)) {
    const int idx = g.edge_index(f[0], f[1]);
    if (idx < 0) {
      throw ValidationError("line " + std::to_string(line) + ": {" + std::to_string(f[0]) + "," +
                            std::to_string(f[1]) + "} is not an edge");
    }
    if (f[2] < 1) throw ValidationError("line " + std::to_string(line) + ": colors must be positive");
    if (out.colors[idx] != 0) throw ValidationError("line " + std::to_string(line) + ": edge colored twice");
    out.colors[idx] = f[2];
  }
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (out.colors[i] == 0) {
      throw ValidationError("edge {" + std::to_string(edges[i].first) + "," + std::to_string(edges[i].second) +
                            "} has no color");
    }
  }
  return out;
}

std::string format_vertex_coloring(const VertexColoring& c) {
  std::string out;
  for (std::size_t v = 0; v < c.colors.size(); ++v) {
    out += std::to_string(v) + "\t" + std::to_string(c.colors[v]) + "\n";
  }
  return out;
}

std::string format_edge_coloring(const Graph& g, const EdgeColoring& c) {
  check_domain(g, c);
  std::string out;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out += std::to_string(edges[i].first) + "\t" + std::to_string(edges[i].second) + "\t" +
           std::to_string(c.colors[i]) + "\n";
  }
  return out;
}

}  // namespace cfconn
