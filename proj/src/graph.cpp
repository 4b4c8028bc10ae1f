#include "cfconn/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cfconn/error.hpp"

namespace cfconn {

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw ValidationError("negative vertex count " + std::to_string(n));
  adj_.resize(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ValidationError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  edge_count_ = 0;
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    edge_count_ += static_cast<int>(nbrs.size());
  }
  edge_count_ /= 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= order() || !has_edge(u, v)) return -1;
  int index = 0;
  for (Vertex w = 0; w < u; ++w) {
    index += static_cast<int>(std::count_if(adj_[w].begin(), adj_[w].end(),
                                            [w](Vertex x) { return x > w; }));
  }
  for (Vertex x : adj_[u]) {
    if (x > u && x < v) ++index;
  }
  return index;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != order()) {
    throw ValidationError("permutation length does not match graph order");
  }
  std::vector<Edge> mapped;
  for (auto [u, v] : edges()) {
    Vertex a = perm[u];
    Vertex b = perm[v];
    mapped.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph(order(), mapped);
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  auto all = edges();
  std::erase(all, Edge{std::min(u, v), std::max(u, v)});
  return Graph(order(), all);
}

std::size_t VertexSubsetPartition::largest_block() const {
  std::size_t best = 0;
  for (const auto& b : blocks) best = std::max(best, b.size());
  return best;
}

// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_index(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  if (value < 0) throw ParseError(line, "negative index " + std::string(token));
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  int declared = -1;
  int inferred = 0;
  bool seen_edge = false;
  std::vector<Edge> edges;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto tokens = split_ws(line);
    if (tokens.size() == 2 && tokens[0] == "n") {
      if (declared >= 0 || seen_edge) throw ParseError(line_no, "header 'n' must come first");
      declared = parse_index(tokens[1], line_no);
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected 'u v'");
    const int u = parse_index(tokens[0], line_no);
    const int v = parse_index(tokens[1], line_no);
    if (u == v) throw ValidationError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u));
    if (declared >= 0 && (u >= declared || v >= declared)) {
      throw ValidationError("line " + std::to_string(line_no) + ": endpoint exceeds declared order " +
                            std::to_string(declared));
    }
    edges.emplace_back(std::min(u, v), std::max(u, v));
    inferred = std::max(inferred, std::max(u, v) + 1);
    seen_edge = true;
  }
  return Graph(declared >= 0 ? declared : inferred, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string to_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError(1, "empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError(1, "graph6 byte out of range");
  }
  const int n = text[0] - 63;
  if (n > 62) throw ParseError(1, "graph6 orders above 62 are not supported");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != 1 + bytes) throw ParseError(1, "graph6 length does not match order");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw ValidationError("graph6 output supports orders up to 62");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

// ---------------------------------------------------------------------------

Graph path_graph(int n) {
  if (n < 1) throw ValidationError("path_graph requires n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph star_graph(int n) {
  if (n < 1) throw ValidationError("star_graph requires n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  if (n < 1) throw ValidationError("complete_graph requires n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw ValidationError("cycle_graph requires n >= 3");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, e);
}

// ---------------------------------------------------------------------------

namespace {

// Marks everything reachable from `start` while avoiding `blocked`.
std::vector<char> reach(const Graph& g, Vertex start, Vertex blocked) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (w != blocked && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  const auto seen = reach(g, 0, -1);
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g); }

void require_connected(const Graph& g, std::string_view what) {
  if (!is_connected(g)) throw DisconnectedError(std::string(what) + " requires a connected graph");
}

std::vector<Vertex> cut_vertices(const Graph& g) {
  require_connected(g, "cut_vertices");
  const int n = g.order();
  if (n < 3) return {};
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  // Iterative low-link DFS from the root 0; frame = (vertex, next neighbor slot).
  std::vector<std::pair<Vertex, std::size_t>> stack;
  std::vector<Vertex> parent(n, -1);
  int timer = 0;
  int root_children = 0;
  disc[0] = low[0] = timer++;
  stack.emplace_back(0, 0);
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    auto nbrs = g.neighbors(u);
    if (next < nbrs.size()) {
      const Vertex w = nbrs[next++];
      if (disc[w] < 0) {
        parent[w] = u;
        disc[w] = low[w] = timer++;
        if (u == 0) ++root_children;
        stack.emplace_back(w, 0);
      } else if (w != parent[u]) {
        low[u] = std::min(low[u], disc[w]);
      }
      continue;
    }
    const Vertex done = u;
    stack.pop_back();
    const Vertex p = parent[done];
    if (p >= 0) {
      low[p] = std::min(low[p], low[done]);
      if (p != 0 && low[done] >= disc[p]) is_cut[p] = 1;
    }
  }
  if (root_children > 1) is_cut[0] = 1;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.push_back(v);
  }
  return out;
}

bool is_two_connected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

VertexSubsetPartition delete_vertex_components(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw ValidationError("vertex " + std::to_string(v) + " out of range");
  }
  VertexSubsetPartition out;
  std::vector<char> assigned(static_cast<std::size_t>(g.order()), 0);
  assigned[v] = 1;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (assigned[s]) continue;
    const auto seen = reach(g, s, v);
    std::vector<Vertex> block;
    for (Vertex u = 0; u < g.order(); ++u) {
      if (seen[u]) {
        block.push_back(u);
        assigned[u] = 1;
      }
    }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

Graph spanning_tree(const Graph& g) {
  if (g.order() < 1) throw ValidationError("spanning_tree requires n >= 1");
  require_connected(g, "spanning_tree");
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Edge> tree;
  std::vector<Vertex> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        tree.emplace_back(std::min(u, w), std::max(u, w));
        queue.push_back(w);
      }
    }
  }
  return Graph(g.order(), tree);
}

}  // namespace cfconn
