#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cfconn {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // always stored with first < second

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Immutable once built. Every constructor path validates symmetry,
/// simplicity and index range, so a Graph value always satisfies them.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges collapse; a self-loop
  /// or an endpoint outside [0, n) throws ValidationError.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  int size() const noexcept { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v, sorted lexicographically. Edge colorings
  /// index into this order.
  std::vector<Edge> edges() const;

  /// Index of edge {u, v} in edges(), or -1 if absent.
  int edge_index(Vertex u, Vertex v) const;

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  /// Same vertex set, one edge removed.
  Graph without_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  int edge_count_ = 0;
};

/// Components left after deleting a set of vertices; blocks are sorted and
/// ordered by their smallest member.
struct VertexSubsetPartition {
  std::vector<std::vector<Vertex>> blocks;

  std::size_t largest_block() const;
};

// Parsing and serialization ------------------------------------------------

/// Parses the edge-list text format: optional header "n <count>", then one
/// "u v" pair per line. '#' starts a comment, blank lines are ignored.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);
std::string to_edge_list(const Graph& g);

/// graph6 as used by nauty's geng/showg, for orders up to 62.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Named families -----------------------------------------------------------

Graph path_graph(int n);
Graph star_graph(int n);  // K_{1,n-1}, center 0
Graph complete_graph(int n);
Graph cycle_graph(int n);

// Structure ------------------------------------------------------------------

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Articulation points, ascending. Throws DisconnectedError on a
/// disconnected graph.
std::vector<Vertex> cut_vertices(const Graph& g);

/// n >= 3, connected and free of cut vertices.
bool is_two_connected(const Graph& g);

VertexSubsetPartition delete_vertex_components(const Graph& g, Vertex v);

/// Breadth-first spanning tree from vertex 0, scanning neighbors in
/// ascending order.
Graph spanning_tree(const Graph& g);

/// Throws DisconnectedError unless g is connected.
void require_connected(const Graph& g, std::string_view what);

}  // namespace cfconn
