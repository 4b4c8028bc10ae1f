#include "cfconn/exact.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "cfconn/error.hpp"

namespace cfconn {

namespace {

using Mask = std::uint64_t;
constexpr int kMaxItems = 63;

// Every vertex pair with the distinct item sets (vertices or edges) of its
// simple paths. A pair can only be judged once all items in those sets are
// colored, so each pair is attached to the largest such item.
struct PathSystem {
  int items = 0;
  std::vector<std::vector<Mask>> pair_paths;
  std::vector<std::vector<int>> due_at;  // item -> pairs decidable once it is colored
};

void finalize(PathSystem& sys) {
  sys.due_at.assign(static_cast<std::size_t>(sys.items), {});
  for (std::size_t p = 0; p < sys.pair_paths.size(); ++p) {
    auto& paths = sys.pair_paths[p];
    std::sort(paths.begin(), paths.end());
    paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
    Mask all = 0;
    for (Mask m : paths) all |= m;
    if (all == 0) continue;  // K_1 has no pairs; connected inputs always have paths
    sys.due_at[static_cast<std::size_t>(std::bit_width(all) - 1)].push_back(static_cast<int>(p));
  }
}

// Enumerates every simple path from each source, recording for each target
// v > source the set of vertices (edge_items=false) or edges (true) used.
PathSystem build_paths(const Graph& g, bool edge_items) {
  const int n = g.order();
  PathSystem sys;
  sys.items = edge_items ? g.size() : n;
  sys.pair_paths.resize(static_cast<std::size_t>(n) * n);

  std::vector<std::vector<int>> edge_id(static_cast<std::size_t>(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w : g.neighbors(u)) edge_id[u].push_back(g.edge_index(u, w));
  }

  struct Frame {
    Vertex v;
    std::size_t next;
    Mask mask;
  };
  for (Vertex source = 0; source < n; ++source) {
    Mask on_path = Mask{1} << source;
    std::vector<Frame> stack{{source, 0, edge_items ? Mask{0} : Mask{1} << source}};
    while (!stack.empty()) {
      Frame& top = stack.back();
      auto nbrs = g.neighbors(top.v);
      if (top.next < nbrs.size()) {
        const std::size_t slot = top.next++;
        const Vertex w = nbrs[slot];
        if (on_path & (Mask{1} << w)) continue;
        const Mask step = edge_items ? Mask{1} << edge_id[top.v][slot] : Mask{1} << w;
        const Mask mask = top.mask | step;
        if (w > source) sys.pair_paths[static_cast<std::size_t>(source) * n + w].push_back(mask);
        on_path |= Mask{1} << w;
        stack.push_back({w, 0, mask});
        continue;
      }
      on_path &= ~(Mask{1} << top.v);
      stack.pop_back();
    }
  }
  finalize(sys);
  return sys;
}

// Restricted-growth search for a coloring of the items with exactly k classes
// under which every pair has a path meeting some class exactly once.
class ColoringSearch {
 public:
  ColoringSearch(PathSystem&&, int) = delete;
  ColoringSearch(const PathSystem& sys, int k) : sys_(sys), k_(k), classes_(static_cast<std::size_t>(k), 0) {
    assignment_.assign(static_cast<std::size_t>(sys.items), 0);
  }

  bool run() { return k_ <= sys_.items && place(0, 0); }
  const std::vector<int>& assignment() const { return assignment_; }
  std::uint64_t explored() const { return explored_; }

 private:
  bool pair_ok(int pair) const {
    for (Mask path : sys_.pair_paths[static_cast<std::size_t>(pair)]) {
      for (Mask cls : classes_) {
        if (std::popcount(path & cls) == 1) return true;
      }
    }
    return false;
  }

  bool place(int item, int used) {
    ++explored_;
    if (item == sys_.items) return true;
    const int remaining_after = sys_.items - item - 1;
    const int top = std::min(used, k_ - 1);
    for (int c = 0; c <= top; ++c) {
      const int used_next = std::max(used, c + 1);
      if (remaining_after < k_ - used_next) continue;
      classes_[c] |= Mask{1} << item;
      assignment_[item] = c + 1;
      bool ok = true;
      for (int pair : sys_.due_at[item]) {
        if (!pair_ok(pair)) {
          ok = false;
          break;
        }
      }
      if (ok && place(item + 1, used_next)) return true;
      classes_[c] &= ~(Mask{1} << item);
    }
    return false;
  }

  const PathSystem& sys_;
  int k_;
  std::vector<Mask> classes_;
  std::vector<int> assignment_;
  std::uint64_t explored_ = 0;
};

void check_vertex_cap(const Graph& g, const SolverLimits& limits) {
  if (g.order() > limits.max_vertices) throw CapExceededError("max-n", limits.max_vertices, g.order());
  if (g.order() > kMaxItems) throw CapExceededError("max-n", kMaxItems, g.order());
}

void check_edge_cap(const Graph& g, const SolverLimits& limits) {
  if (g.size() > limits.max_edges) throw CapExceededError("max-edges", limits.max_edges, g.size());
  if (g.size() > kMaxItems) throw CapExceededError("max-edges", kMaxItems, g.size());
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

// True when, within the vertices of `assigned`, no two vertices labelled i
// are joined through vertices labelled <= i, for every i in [from, k].
bool ranking_consistent(const std::vector<Mask>& adj, const std::vector<Mask>& by_label, Mask assigned, int from,
                        int k) {
  Mask at_most = 0;
  for (int i = 1; i < from; ++i) at_most |= by_label[i];
  for (int i = from; i <= k; ++i) {
    at_most |= by_label[i];
    const Mask allowed = at_most & assigned;
    Mask pending = by_label[i] & assigned;
    while (pending) {
      const Mask seed = pending & (~pending + 1);
      Mask comp = seed;
      Mask frontier = seed;
      while (frontier) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const Mask fresh = adj[static_cast<std::size_t>(v)] & allowed & ~comp;
        comp |= fresh;
        frontier |= fresh;
      }
      if (std::popcount(comp & by_label[i]) > 1) return false;
      pending &= ~comp;
    }
  }
  return true;
}

class RankingSearch {
 public:
  RankingSearch(const Graph& g, int k)
      : adj_(adjacency_masks(g)), n_(g.order()), k_(k), by_label_(static_cast<std::size_t>(k) + 1, 0),
        labels_(static_cast<std::size_t>(g.order()), 0) {}

  bool run() { return place(0, 0); }
  const std::vector<int>& labels() const { return labels_; }
  std::uint64_t explored() const { return explored_; }

 private:
  bool place(int v, Mask assigned) {
    ++explored_;
    if (v == n_) return true;
    const Mask next = assigned | (Mask{1} << v);
    for (int label = 1; label <= k_; ++label) {
      by_label_[label] |= Mask{1} << v;
      labels_[v] = label;
      if (ranking_consistent(adj_, by_label_, next, label, k_) && place(v + 1, next)) return true;
      by_label_[label] &= ~(Mask{1} << v);
    }
    return false;
  }

  std::vector<Mask> adj_;
  int n_;
  int k_;
  std::vector<Mask> by_label_;
  std::vector<int> labels_;
  std::uint64_t explored_ = 0;
};

}  // namespace

std::optional<VertexColoring> find_vertex_coloring(const Graph& g, int k, const SolverLimits& limits) {
  check_vertex_cap(g, limits);
  require_connected(g, "find_vertex_coloring");
  if (k < 1) return std::nullopt;
  const PathSystem sys = build_paths(g, false);
  ColoringSearch search(sys, k);
  if (!search.run()) return std::nullopt;
  return VertexColoring{search.assignment()};
}

std::optional<EdgeColoring> find_edge_coloring(const Graph& g, int k, const SolverLimits& limits) {
  check_edge_cap(g, limits);
  require_connected(g, "find_edge_coloring");
  if (k < 1) return std::nullopt;
  const PathSystem sys = build_paths(g, true);
  ColoringSearch search(sys, k);
  if (!search.run()) return std::nullopt;
  return EdgeColoring{search.assignment()};
}

ExactResult<VertexColoring> exact_vcfc(const Graph& g, const SolverLimits& limits) {
  check_vertex_cap(g, limits);
  require_connected(g, "exact_vcfc");
  if (g.order() == 0) throw ValidationError("exact_vcfc requires n >= 1");
  if (g.order() == 1) return {1, VertexColoring{{1}}, 1};
  const PathSystem sys = build_paths(g, false);
  ExactResult<VertexColoring> result;
  for (int k = 2; k <= g.order(); ++k) {
    ColoringSearch search(sys, k);
    const bool found = search.run();
    result.explored += search.explored();
    if (found) {
      result.value = k;
      result.witness = VertexColoring{search.assignment()};
      return result;
    }
  }
  // All-distinct colors always work; unreachable for connected inputs.
  throw ValidationError("exact_vcfc: no coloring found");
}

ExactResult<EdgeColoring> exact_cfc(const Graph& g, const SolverLimits& limits) {
  check_edge_cap(g, limits);
  require_connected(g, "exact_cfc");
  if (g.order() == 0) throw ValidationError("exact_cfc requires n >= 1");
  if (g.order() == 1) return {0, EdgeColoring{}, 1};
  const PathSystem sys = build_paths(g, true);
  ExactResult<EdgeColoring> result;
  for (int k = 1; k <= g.size(); ++k) {
    ColoringSearch search(sys, k);
    const bool found = search.run();
    result.explored += search.explored();
    if (found) {
      result.value = k;
      result.witness = EdgeColoring{search.assignment()};
      return result;
    }
  }
  throw ValidationError("exact_cfc: no coloring found");
}

bool is_valid_ranking(const Graph& g, const Ranking& r) {
  if (static_cast<int>(r.labels.size()) != g.order()) {
    throw ValidationError("ranking covers " + std::to_string(r.labels.size()) + " vertices, graph has " +
                          std::to_string(g.order()));
  }
  if (g.order() > kMaxItems) throw CapExceededError("max-n", kMaxItems, g.order());
  for (int label : r.labels) {
    if (label < 1) throw ValidationError("ranking labels must be positive integers");
  }
  const int k = r.num_labels();
  std::vector<Mask> by_label(static_cast<std::size_t>(k) + 1, 0);
  for (Vertex v = 0; v < g.order(); ++v) by_label[r.labels[v]] |= Mask{1} << v;
  const Mask everything = g.order() == 0 ? 0 : (~Mask{0} >> (64 - g.order()));
  return ranking_consistent(adjacency_masks(g), by_label, everything, 1, k);
}

ExactResult<Ranking> exact_ranking(const Graph& g, const SolverLimits& limits) {
  check_vertex_cap(g, limits);
  require_connected(g, "exact_ranking");
  if (g.order() == 0) throw ValidationError("exact_ranking requires n >= 1");
  ExactResult<Ranking> result;
  for (int k = 1; k <= g.order(); ++k) {
    RankingSearch search(g, k);
    const bool found = search.run();
    result.explored += search.explored();
    if (found) {
      result.value = k;
      result.witness = Ranking{search.labels()};
      return result;
    }
  }
  throw ValidationError("exact_ranking: no ranking found");
}

}  // namespace cfconn
