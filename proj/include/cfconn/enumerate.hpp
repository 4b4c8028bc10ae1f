#pragma once

#include <string>
#include <vector>

#include "cfconn/exact.hpp"
#include "cfconn/graph.hpp"
#include "cfconn/report.hpp"

namespace cfconn {

/// One representative per isomorphism class at a fixed order, sorted by
/// canonical key. members[i] is already in canonical labeling.
struct IsoClassCatalog {
  int order = 0;
  std::vector<Graph> members;
  std::vector<std::string> canonical_keys;

  std::size_t size() const { return members.size(); }
};

constexpr int kMaxTreeOrder = 10;
constexpr int kMaxGraphOrder = 7;

/// Free trees of order n (1..10). Built by hanging a leaf on every vertex of
/// every tree of order n-1 and deduplicating by tree_canonical_key.
IsoClassCatalog all_trees(int n);

/// Connected graphs of order n (1..7). Every connected graph has a vertex
/// whose removal keeps it connected, so attaching a new vertex to each
/// nonempty subset of each class of order n-1 reaches every class; duplicates
/// collapse under the minimal adjacency code.
IsoClassCatalog all_connected_graphs(int n);

struct SweepOptions {
  /// Solver caps used inside sweeps. The edge cap admits every graph of
  /// order 6 so that the monotonicity sweep covers K_6.
  SolverLimits limits{10, 15};
  /// Worker threads; 0 picks the hardware concurrency. Output does not
  /// depend on this value.
  int jobs = 0;
};

/// vcfc(G) == 2 exactly when G is 2-connected or has one cut vertex; all
/// connected classes, 3 <= n <= 6.
SearchReport check_two_color_characterization(int n, const SweepOptions& options = {});

/// Every tree of order n (2..9) is colored by color_tree within
/// ceil(log2(n+1)) colors and the coloring verifies; for n <= 8 the exact
/// vcfc is checked against the same bound.
SearchReport check_path_bound(int n, const SweepOptions& options = {});

/// cfc(T) >= ceil(log2 n) for every tree of order n (2..10), with the
/// trees of least and greatest cfc listed as extremal.
SearchReport check_cfc_lower_bound(int n, const SweepOptions& options = {});

/// vcfc and cfc do not decrease when one edge is deleted and the graph stays
/// connected; connected classes of order n (1..6). `samples` > 0 limits the
/// sweep to the first `samples` classes in key order.
SearchReport check_monotonicity(int n, int samples = 0, const SweepOptions& options = {});

}  // namespace cfconn
