#include "cfconn/canonical.hpp"

#include <algorithm>
#include <limits>

#include "cfconn/error.hpp"

namespace cfconn {

namespace {

std::string rooted_code(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : t.neighbors(v)) {
    if (w != parent) kids.push_back(rooted_code(t, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ")";
  return out;
}

std::vector<Vertex> centroids(const Graph& t) {
  const int n = t.order();
  std::vector<Vertex> order;
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (Vertex w : t.neighbors(u)) {
      if (w != parent[u]) {
        parent[w] = u;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> size(static_cast<std::size_t>(n), 1);
  std::vector<int> heaviest(static_cast<std::size_t>(n), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it == 0) continue;
    size[parent[*it]] += size[*it];
    heaviest[parent[*it]] = std::max(heaviest[parent[*it]], size[*it]);
  }
  int best = n;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    const int score = std::max(heaviest[v], n - size[v]);
    if (score < best) {
      best = score;
      out.assign(1, v);
    } else if (score == best) {
      out.push_back(v);
    }
  }
  return out;
}

Vertex canonical_root(const Graph& t, std::string* key) {
  Vertex root = -1;
  std::string best;
  for (Vertex c : centroids(t)) {
    std::string code = rooted_code(t, c, -1);
    if (root < 0 || code < best) {
      best = std::move(code);
      root = c;
    }
  }
  if (key) *key = std::move(best);
  return root;
}

void require_tree(const Graph& t) {
  if (!is_tree(t)) throw ValidationError("tree canonical form requires a tree");
}

// Preorder numbering with children visited in ascending code order.
void number_preorder(const Graph& t, Vertex v, Vertex parent, std::vector<Vertex>& perm, int& next) {
  perm[v] = next++;
  std::vector<std::pair<std::string, Vertex>> kids;
  for (Vertex w : t.neighbors(v)) {
    if (w != parent) kids.emplace_back(rooted_code(t, w, v), w);
  }
  std::sort(kids.begin(), kids.end());
  for (const auto& [code, w] : kids) number_preorder(t, w, v, perm, next);
}

class CodeMinimizer {
 public:
  explicit CodeMinimizer(const Graph& g)
      : g_(g), n_(g.order()), total_bits_(n_ * (n_ - 1) / 2), at_(static_cast<std::size_t>(n_), -1),
        placed_(static_cast<std::size_t>(n_), 0) {}

  AdjacencyCode run() {
    best_ = std::numeric_limits<std::uint64_t>::max();
    extend(0, 0);
    AdjacencyCode out{best_, std::vector<Vertex>(static_cast<std::size_t>(n_))};
    for (int pos = 0; pos < n_; ++pos) out.perm[best_at_[pos]] = pos;
    if (n_ <= 1) out.code = 0;
    return out;
  }

 private:
  // `prefix` holds the bits of columns 1..pos-1, right-aligned.
  void extend(int pos, std::uint64_t prefix) {
    if (pos == n_) {
      if (prefix < best_ || best_at_.empty()) {
        best_ = prefix;
        best_at_ = at_;
      }
      return;
    }
    const int bits_after = pos * (pos + 1) / 2;
    for (Vertex x = 0; x < n_; ++x) {
      if (placed_[x]) continue;
      std::uint64_t next = prefix;
      for (int i = 0; i < pos; ++i) next = (next << 1) | (g_.has_edge(at_[i], x) ? 1u : 0u);
      if (!best_at_.empty() && next > (best_ >> (total_bits_ - bits_after))) continue;
      placed_[x] = 1;
      at_[pos] = x;
      extend(pos + 1, next);
      placed_[x] = 0;
    }
  }

  const Graph& g_;
  int n_;
  int total_bits_;
  std::vector<Vertex> at_;  // position -> vertex
  std::vector<char> placed_;
  std::uint64_t best_ = 0;
  std::vector<Vertex> best_at_;
};

}  // namespace

std::string tree_canonical_key(const Graph& t) {
  require_tree(t);
  std::string key;
  canonical_root(t, &key);
  return key;
}

Graph canonical_tree(const Graph& t) {
  require_tree(t);
  const Vertex root = canonical_root(t, nullptr);
  std::vector<Vertex> perm(static_cast<std::size_t>(t.order()), -1);
  int next = 0;
  number_preorder(t, root, -1, perm, next);
  return t.relabeled(perm);
}

AdjacencyCode minimal_adjacency_code(const Graph& g) {
  if (g.order() > 11) throw CapExceededError("canonical-code-n", 11, g.order());
  return CodeMinimizer(g).run();
}

std::string code_key(int n, std::uint64_t code) {
  const int bits = n * (n - 1) / 2;
  std::string out = std::to_string(n) + ":";
  for (int b = bits - 1; b >= 0; --b) out.push_back((code >> b) & 1 ? '1' : '0');
  return out;
}

std::string graph_canonical_key(const Graph& g) { return code_key(g.order(), minimal_adjacency_code(g).code); }

Graph canonical_graph(const Graph& g) { return g.relabeled(minimal_adjacency_code(g).perm); }

}  // namespace cfconn
