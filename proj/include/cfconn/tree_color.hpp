#pragma once

#include "cfconn/coloring.hpp"
#include "cfconn/graph.hpp"

namespace cfconn {

/// A vertex whose deletion leaves components as small as possible.
struct SplitterResult {
  Vertex vertex = -1;
  int moc = 0;  // order of the largest component of T - vertex
  VertexSubsetPartition components;
};

/// Order of the largest component of t - v. Requires a tree with n >= 2.
int moc(const Graph& t, Vertex v);

/// Vertex minimizing moc, smallest index on ties. The minimum never exceeds
/// floor(n/2), and (n-1)/2 for odd n.
SplitterResult find_splitter(const Graph& t);

/// Conflict-free vertex coloring of a tree with at most ceil(log2(n+1))
/// colors, returned in normalized form.
///
/// The splitter of each component of order m takes color ceil(log2(m+1));
/// every component left after removing it has order at most floor(m/2) and
/// is colored recursively from the smaller palette. Any path through the
/// splitter therefore sees its color exactly once.
VertexColoring color_tree(const Graph& t);

/// color_tree applied to the breadth-first spanning tree of g. Paths of the
/// tree are paths of g, so the result is conflict-free on g as well.
VertexColoring color_graph(const Graph& g);

}  // namespace cfconn
