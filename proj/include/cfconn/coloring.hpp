#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cfconn/graph.hpp"

namespace cfconn {

/// Color per vertex, colors >= 1. Not necessarily surjective onto 1..k;
/// normalized() produces that form.
struct VertexColoring {
  std::vector<int> colors;

  int num_colors() const;  // distinct colors used
  int max_color() const;

  /// Order-preserving compression onto 1..num_colors().
  VertexColoring normalized() const;

  friend bool operator==(const VertexColoring&, const VertexColoring&) = default;
};

/// Color per edge, indexed by position in Graph::edges().
struct EdgeColoring {
  std::vector<int> colors;

  int num_colors() const;
  EdgeColoring normalized() const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

/// Vertex labels 1..k. Valid when every path joining two equal labels i
/// passes through a label greater than i.
struct Ranking {
  std::vector<int> labels;

  int num_labels() const;

  friend bool operator==(const Ranking&, const Ranking&) = default;
};

/// Smallest k with 2^k >= x (x >= 1).
int ceil_log2(long x);

// Coloring files --------------------------------------------------------------
//
// Vertex colorings: one "vertex<TAB>color" line per vertex.
// Edge colorings:   one "u<TAB>v<TAB>color" line per edge.
// '#' comments and blank lines are ignored; any whitespace separates fields.

VertexColoring parse_vertex_coloring(std::string_view text, const Graph& g);
EdgeColoring parse_edge_coloring(std::string_view text, const Graph& g);
std::string format_vertex_coloring(const VertexColoring& c);
std::string format_edge_coloring(const Graph& g, const EdgeColoring& c);

/// Throws ValidationError if the coloring does not cover exactly g's vertices
/// (edges) or uses a color below 1.
void check_domain(const Graph& g, const VertexColoring& c);
void check_domain(const Graph& g, const EdgeColoring& c);

}  // namespace cfconn
