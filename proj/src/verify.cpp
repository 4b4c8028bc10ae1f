#include "cfconn/verify.hpp"

#include <algorithm>
#include <vector>

#include "cfconn/error.hpp"

namespace cfconn {

namespace {

// Multiplicity of each color along the current path plus the number of
// colors seen exactly once.
class Tally {
 public:
  explicit Tally(int palette) : counts_(static_cast<std::size_t>(palette) + 1, 0) {}

  void add(int c) {
    const int now = ++counts_[c];
    if (now == 1) ++singletons_;
    else if (now == 2) --singletons_;
  }
  void remove(int c) {
    const int now = --counts_[c];
    if (now == 1) ++singletons_;
    else if (now == 0) --singletons_;
  }
  bool conflict_free() const { return singletons_ > 0; }

 private:
  std::vector<int> counts_;
  int singletons_ = 0;
};

// For each adjacency slot, the color contributed when stepping u -> w.
// `entry` is what the source itself contributes (vertex variant only).
struct StepColors {
  std::vector<std::vector<int>> step;  // parallel to g.neighbors(u)
  std::vector<int> entry;              // 0 means "nothing"
  int palette = 0;
};

StepColors vertex_steps(const Graph& g, const VertexColoring& c) {
  const auto compact = c.normalized().colors;
  StepColors s;
  s.palette = c.num_colors();
  s.entry = compact;
  s.step.resize(static_cast<std::size_t>(g.order()));
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex w : g.neighbors(u)) s.step[u].push_back(compact[w]);
  }
  return s;
}

StepColors edge_steps(const Graph& g, const EdgeColoring& c) {
  const auto compact = c.normalized().colors;
  StepColors s;
  s.palette = c.num_colors();
  s.entry.assign(static_cast<std::size_t>(g.order()), 0);
  s.step.resize(static_cast<std::size_t>(g.order()));
  // edges() is sorted by (min, max); walking u ascending and its sorted
  // upper neighbors reproduces that order.
  std::vector<std::vector<int>> id(static_cast<std::size_t>(g.order()));
  for (Vertex u = 0; u < g.order(); ++u) id[u].assign(g.neighbors(u).size(), -1);
  int next = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    auto nbrs = g.neighbors(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const Vertex w = nbrs[i];
      if (w < u) continue;
      id[u][i] = next;
      auto back = g.neighbors(w);
      id[w][static_cast<std::size_t>(std::lower_bound(back.begin(), back.end(), u) - back.begin())] = next;
      ++next;
    }
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    for (int e : id[u]) s.step[u].push_back(compact[static_cast<std::size_t>(e)]);
  }
  return s;
}

// Marks every target v > source that is reached by a conflict-free path.
// On a tree the DFS walks each unique path once; otherwise it backtracks
// over all simple paths, stopping once every target is satisfied.
std::vector<char> satisfied_from(const Graph& g, const StepColors& s, Vertex source, bool tree) {
  const int n = g.order();
  std::vector<char> ok(static_cast<std::size_t>(n), 0);
  int remaining = n - 1 - source;
  if (remaining <= 0) return ok;

  Tally tally(s.palette);
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  struct Frame {
    Vertex v;
    std::size_t next;
    int color;  // contributed on entry, 0 for none
  };
  std::vector<Frame> stack;
  if (s.entry[source]) tally.add(s.entry[source]);
  on_path[source] = 1;
  stack.push_back({source, 0, s.entry[source]});

  while (!stack.empty() && remaining > 0) {
    Frame& top = stack.back();
    auto nbrs = g.neighbors(top.v);
    if (top.next < nbrs.size()) {
      const std::size_t slot = top.next++;
      const Vertex w = nbrs[slot];
      if (on_path[w]) continue;
      const int c = s.step[top.v][slot];
      tally.add(c);
      on_path[w] = 1;
      if (w > source && !ok[w] && tally.conflict_free()) {
        ok[w] = 1;
        --remaining;
      }
      stack.push_back({w, 0, c});
      continue;
    }
    if (top.color) tally.remove(top.color);
    // On a tree a finished vertex can stay marked: no other path reaches it.
    if (!tree) on_path[top.v] = 0;
    stack.pop_back();
  }
  return ok;
}

bool resolve_tree_strategy(const Graph& g, const VerifyOptions& options) {
  switch (options.strategy) {
    case PathStrategy::tree_paths:
      if (!is_tree(g)) throw ValidationError("tree-path verification requires a tree");
      return true;
    case PathStrategy::all_simple_paths:
      break;
    case PathStrategy::automatic:
      if (is_tree(g)) return true;
      break;
  }
  if (g.order() > options.max_vertices) {
    throw CapExceededError("max-verify-n", options.max_vertices, g.order());
  }
  return false;
}

std::optional<VertexPair> first_conflict(const Graph& g, const StepColors& s, const VerifyOptions& options) {
  require_connected(g, "conflict-free verification");
  const bool tree = resolve_tree_strategy(g, options);
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto ok = satisfied_from(g, s, u, tree);
    for (Vertex v = g.order() - 1; v > u; --v) {
      if (!ok[v]) return VertexPair{u, v};
    }
  }
  return std::nullopt;
}

bool has_singleton(std::vector<int> colors) {
  std::sort(colors.begin(), colors.end());
  for (std::size_t i = 0; i < colors.size();) {
    std::size_t j = i;
    while (j < colors.size() && colors[j] == colors[i]) ++j;
    if (j - i == 1) return true;
    i = j;
  }
  return false;
}

}  // namespace

bool path_is_conflict_free_vertex(const VertexColoring& coloring, std::span<const Vertex> path) {
  if (path.empty()) throw ValidationError("empty path");
  std::vector<int> colors;
  for (Vertex v : path) {
    if (v < 0 || static_cast<std::size_t>(v) >= coloring.colors.size()) {
      throw ValidationError("path vertex " + std::to_string(v) + " not colored");
    }
    colors.push_back(coloring.colors[v]);
  }
  return has_singleton(std::move(colors));
}

bool path_is_conflict_free_edge(const Graph& g, const EdgeColoring& coloring, std::span<const Vertex> path) {
  if (path.size() < 2) throw ValidationError("an edge path needs at least two vertices");
  check_domain(g, coloring);
  std::vector<int> colors;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const int e = g.edge_index(path[i], path[i + 1]);
    if (e < 0) {
      throw ValidationError("{" + std::to_string(path[i]) + "," + std::to_string(path[i + 1]) +
                            "} is not an edge");
    }
    colors.push_back(coloring.colors[static_cast<std::size_t>(e)]);
  }
  return has_singleton(std::move(colors));
}

std::optional<VertexPair> first_vertex_conflict(const Graph& g, const VertexColoring& coloring,
                                                const VerifyOptions& options) {
  check_domain(g, coloring);
  return first_conflict(g, vertex_steps(g, coloring), options);
}

std::optional<VertexPair> first_edge_conflict(const Graph& g, const EdgeColoring& coloring,
                                              const VerifyOptions& options) {
  check_domain(g, coloring);
  return first_conflict(g, edge_steps(g, coloring), options);
}

bool is_cf_vertex_connected(const Graph& g, const VertexColoring& coloring, const VerifyOptions& options) {
  return !first_vertex_conflict(g, coloring, options).has_value();
}

bool is_cf_edge_connected(const Graph& g, const EdgeColoring& coloring, const VerifyOptions& options) {
  return !first_edge_conflict(g, coloring, options).has_value();
}

}  // namespace cfconn
