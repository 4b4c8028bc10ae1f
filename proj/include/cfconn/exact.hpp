#pragma once

#include <cstdint>
#include <optional>

#include "cfconn/coloring.hpp"
#include "cfconn/graph.hpp"

namespace cfconn {

/// Size caps for the brute-force solvers. Worst-case cost grows like
/// k^n times the path enumeration, so these are refusals, not tuning knobs.
struct SolverLimits {
  int max_vertices = 10;  // exact_vcfc, exact_ranking
  int max_edges = 10;     // exact_cfc
};

template <typename Witness>
struct ExactResult {
  int value = 0;              // minimum number of colors (labels)
  Witness witness;            // attains `value`
  std::uint64_t explored = 0; // search nodes (partial assignments) visited
};

/// Minimum number of vertex colors making g conflict-free vertex-connected.
///
/// Colorings are enumerated as restricted growth strings (each new color is
/// the next unused one), so every partition of V into k classes is visited
/// once. k ascends from 2, hence the first success is the minimum and the
/// witness is the first such string in lexicographic order. A single vertex
/// gets value 1.
ExactResult<VertexColoring> exact_vcfc(const Graph& g, const SolverLimits& limits = {});

/// Minimum number of edge colors making g conflict-free connected. Same
/// enumeration over edges, k ascending from 1. K_1 has value 0.
ExactResult<EdgeColoring> exact_cfc(const Graph& g, const SolverLimits& limits = {});

/// Conflict-free vertex coloring using exactly k colors, or nullopt when the
/// exhausted search finds none. Used to certify minimality (value - 1 fails).
std::optional<VertexColoring> find_vertex_coloring(const Graph& g, int k, const SolverLimits& limits = {});
std::optional<EdgeColoring> find_edge_coloring(const Graph& g, int k, const SolverLimits& limits = {});

/// Whether every path between two vertices labelled i carries a label > i.
/// Equivalently: no two vertices labelled i share a component of the
/// subgraph induced by labels <= i.
bool is_valid_ranking(const Graph& g, const Ranking& r);

/// Minimum k admitting a k-ranking; the witness is lexicographically least.
ExactResult<Ranking> exact_ranking(const Graph& g, const SolverLimits& limits = {});

}  // namespace cfconn
