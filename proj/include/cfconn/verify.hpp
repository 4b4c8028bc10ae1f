#pragma once

#include <optional>
#include <span>
#include <utility>

#include "cfconn/coloring.hpp"
#include "cfconn/graph.hpp"

namespace cfconn {

/// Some color appears on exactly one vertex of the path. Throws
/// ValidationError on an empty path.
bool path_is_conflict_free_vertex(const VertexColoring& coloring, std::span<const Vertex> path);

/// Some color appears on exactly one edge of the path. The path needs at
/// least two vertices and consecutive vertices must be adjacent in g.
bool path_is_conflict_free_edge(const Graph& g, const EdgeColoring& coloring, std::span<const Vertex> path);

enum class PathStrategy {
  automatic,         // tree paths on trees, simple-path search otherwise
  tree_paths,        // unique tree path; requires a tree
  all_simple_paths,  // backtracking over every simple path
};

struct VerifyOptions {
  /// Simple-path search refuses graphs above this order. Trees are exempt
  /// under the automatic strategy.
  int max_vertices = 16;
  PathStrategy strategy = PathStrategy::automatic;
};

using VertexPair = std::pair<Vertex, Vertex>;

/// First pair (u < v) without a conflict-free path, scanning u ascending and,
/// for each u, the partner v from the far end down; nullopt when the coloring
/// makes g conflict-free (vertex-)connected.
std::optional<VertexPair> first_vertex_conflict(const Graph& g, const VertexColoring& coloring,
                                                const VerifyOptions& options = {});
std::optional<VertexPair> first_edge_conflict(const Graph& g, const EdgeColoring& coloring,
                                              const VerifyOptions& options = {});

bool is_cf_vertex_connected(const Graph& g, const VertexColoring& coloring, const VerifyOptions& options = {});
bool is_cf_edge_connected(const Graph& g, const EdgeColoring& coloring, const VerifyOptions& options = {});

}  // namespace cfconn
