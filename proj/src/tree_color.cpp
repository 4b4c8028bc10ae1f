#include "cfconn/tree_color.hpp"

#include <algorithm>
#include <vector>

#include "cfconn/error.hpp"

namespace cfconn {

namespace {

void require_tree(const Graph& t, const char* what) {
  if (!is_tree(t)) throw ValidationError(std::string(what) + " requires a tree");
}

struct Choice {
  Vertex vertex;
  int moc;
  int order;
};

// Per-vertex buffers shared by every component visited in one coloring run.
struct Scratch {
  explicit Scratch(int n)
      : parent(static_cast<std::size_t>(n)), size(static_cast<std::size_t>(n)),
        largest_child(static_cast<std::size_t>(n)) {}
  std::vector<Vertex> parent;
  std::vector<int> size;
  std::vector<int> largest_child;
  std::vector<Vertex> order;
  std::vector<Vertex> stack;
};

// Minimum-moc vertex of the component of `start` among `active` vertices.
// One DFS computes subtree sizes; the component above v then has order
// m - size[v], so every vertex is scored in O(deg).
Choice best_splitter(const Graph& t, const std::vector<char>& active, Vertex start, Scratch& s) {
  auto& order = s.order;
  auto& parent = s.parent;
  auto& size = s.size;
  auto& largest_child = s.largest_child;
  auto& stack = s.stack;
  order.clear();
  stack.assign(1, start);
  parent[start] = start;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (Vertex w : t.neighbors(u)) {
      if (active[w] && w != parent[u]) {
        parent[w] = u;
        stack.push_back(w);
      }
    }
  }
  const int m = static_cast<int>(order.size());
  for (Vertex u : order) {
    size[u] = 1;
    largest_child[u] = 0;
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex u = *it;
    if (u == start) continue;
    size[parent[u]] += size[u];
    largest_child[parent[u]] = std::max(largest_child[parent[u]], size[u]);
  }
  Choice best{-1, m + 1, m};
  for (Vertex u : order) {
    const int score = std::max(m - size[u], largest_child[u]);
    if (score < best.moc || (score == best.moc && u < best.vertex)) best = {u, score, m};
  }
  return best;
}

}  // namespace

int moc(const Graph& t, Vertex v) {
  require_tree(t, "moc");
  if (t.order() < 2) throw ValidationError("moc requires a tree with n >= 2");
  return static_cast<int>(delete_vertex_components(t, v).largest_block());
}

SplitterResult find_splitter(const Graph& t) {
  require_tree(t, "find_splitter");
  if (t.order() < 2) throw ValidationError("find_splitter requires a tree with n >= 2");
  const std::vector<char> active(static_cast<std::size_t>(t.order()), 1);
  Scratch scratch(t.order());
  const Choice c = best_splitter(t, active, 0, scratch);
  return {c.vertex, c.moc, delete_vertex_components(t, c.vertex)};
}

VertexColoring color_tree(const Graph& t) {
  require_tree(t, "color_tree");
  std::vector<int> colors(static_cast<std::size_t>(t.order()), 0);
  std::vector<char> active(static_cast<std::size_t>(t.order()), 1);
  // Components are disjoint, so the processing order cannot affect the result.
  Scratch scratch(t.order());
  std::vector<Vertex> pending{0};
  while (!pending.empty()) {
    const Vertex root = pending.back();
    pending.pop_back();
    const Choice c = best_splitter(t, active, root, scratch);
    colors[c.vertex] = ceil_log2(c.order + 1);
    active[c.vertex] = 0;
    for (Vertex w : t.neighbors(c.vertex)) {
      if (active[w]) pending.push_back(w);
    }
  }
  return VertexColoring{std::move(colors)}.normalized();
}

VertexColoring color_graph(const Graph& g) { return color_tree(spanning_tree(g)); }

}  // namespace cfconn
