#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cfconn/graph.hpp"

namespace cfconn {

/// Isomorphism-invariant string for a free tree: the parenthesized
/// rooted-subtree code (children sorted) taken at a centroid, lexicographically
/// least when there are two centroids.
std::string tree_canonical_key(const Graph& t);

/// The tree relabeled in preorder of its canonical rooted form (root 0,
/// children in code order). Isomorphic trees map to identical graphs.
Graph canonical_tree(const Graph& t);

/// Minimum upper-triangle adjacency code over all vertex permutations.
/// Bits run column by column: (0,1), (0,2), (1,2), (0,3), ... with the first
/// bit most significant. perm[v] is the position of vertex v.
struct AdjacencyCode {
  std::uint64_t code = 0;
  std::vector<Vertex> perm;
};

/// Exact minimum via branch and bound; supports n <= 11.
AdjacencyCode minimal_adjacency_code(const Graph& g);

/// "<n>:<bits>" rendering of the minimal code.
std::string graph_canonical_key(const Graph& g);
std::string code_key(int n, std::uint64_t code);

/// g relabeled by its minimal-code permutation.
Graph canonical_graph(const Graph& g);

}  // namespace cfconn
