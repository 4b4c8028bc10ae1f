#include <doctest.h>

#include <algorithm>
#include <set>

#include "cfconn/enumerate.hpp"
#include "cfconn/error.hpp"
#include "cfconn/tree_color.hpp"
#include "cfconn/verify.hpp"
#include "oracles.hpp"

using namespace cfconn;

namespace {

Graph induced(const Graph& g, const std::vector<Vertex>& keep) {
  std::vector<Vertex> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  }
  return Graph(static_cast<int>(keep.size()), edges);
}

// Levels of splitter recursion needed to exhaust t.
int splitter_depth(const Graph& t) {
  if (t.order() <= 1) return t.order();
  const auto split = find_splitter(t);
  int deepest = 0;
  for (const auto& block : split.components.blocks) deepest = std::max(deepest, splitter_depth(induced(t, block)));
  return deepest + 1;
}

bool surjective(const VertexColoring& c) {
  std::set<int> used(c.colors.begin(), c.colors.end());
  return !used.empty() && *used.begin() == 1 && *used.rbegin() == static_cast<int>(used.size());
}

}  // namespace

TEST_CASE("moc") {
  CHECK(moc(path_graph(5), 2) == 2);
  CHECK(moc(path_graph(5), 0) == 4);
  CHECK(moc(star_graph(6), 0) == 1);
  CHECK_THROWS_AS(moc(cycle_graph(4), 0), ValidationError);
  CHECK_THROWS_AS(moc(path_graph(1), 0), ValidationError);
}

TEST_CASE("find_splitter examples") {
  const auto p7 = find_splitter(path_graph(7));
  CHECK(p7.vertex == 3);
  CHECK(p7.moc == 3);
  CHECK(p7.components.blocks == std::vector<std::vector<Vertex>>{{0, 1, 2}, {4, 5, 6}});

  const auto star = find_splitter(star_graph(6));
  CHECK(star.vertex == 0);
  CHECK(star.moc == 1);

  // P_6: oracle scores are 5,4,3,3,4,5, so the tie at 2/3 goes to 2.
  const Graph p6 = path_graph(6);
  std::vector<int> scores;
  for (Vertex v = 0; v < 6; ++v) scores.push_back(oracle::moc(p6, v));
  REQUIRE(scores == std::vector<int>{5, 4, 3, 3, 4, 5});
  const auto s6 = find_splitter(p6);
  CHECK(s6.vertex == 2);
  CHECK(s6.moc == 3);

  const auto p2 = find_splitter(path_graph(2));
  CHECK(p2.vertex == 0);
  CHECK(p2.moc == 1);

  CHECK_THROWS_AS(find_splitter(path_graph(1)), ValidationError);
  CHECK_THROWS_AS(find_splitter(complete_graph(3)), ValidationError);
}

TEST_CASE("find_splitter minimizes moc over every vertex") {
  for (int n = 2; n <= 10; ++n) {
    for (const Graph& t : all_trees(n).members) {
      int best = n;
      Vertex arg = -1;
      for (Vertex v = 0; v < n; ++v) {
        const int score = oracle::moc(t, v);
        CHECK(moc(t, v) == score);
        if (score < best) {
          best = score;
          arg = v;
        }
      }
      const auto split = find_splitter(t);
      REQUIRE(split.moc == best);
      REQUIRE(split.vertex == arg);
      CHECK(static_cast<int>(split.components.largest_block()) == split.moc);
      CHECK(split.moc <= n / 2);
      if (n % 2 == 1) CHECK(2 * split.moc <= n - 1);
    }
  }
}

TEST_CASE("color_tree examples") {
  CHECK(color_tree(path_graph(1)).colors == std::vector<int>{1});
  CHECK(color_tree(path_graph(2)).num_colors() == 2);
  CHECK(color_tree(path_graph(3)).colors == std::vector<int>{1, 2, 1});

  const auto p7 = color_tree(path_graph(7));
  REQUIRE(oracle::cf_vertex_connected(path_graph(7), {1, 2, 1, 3, 1, 2, 1}));
  CHECK(p7.colors == std::vector<int>{1, 2, 1, 3, 1, 2, 1});

  // Splitter 2 of P_6 takes the top color, then {0,1} and {3,4,5} recurse.
  CHECK(color_tree(path_graph(6)).colors == std::vector<int>{2, 1, 3, 1, 2, 1});

  // K_{1,4}: the center gets the top color; normalization closes the gap.
  CHECK(color_tree(star_graph(5)).colors == std::vector<int>{2, 1, 1, 1, 1});

  CHECK_THROWS_AS(color_tree(cycle_graph(5)), ValidationError);
  CHECK_THROWS_AS(color_tree(Graph(3, {{0, 1}})), ValidationError);
}

TEST_CASE("color_tree respects the path bound on every tree up to order 9") {
  for (int n = 1; n <= 9; ++n) {
    for (const Graph& t : all_trees(n).members) {
      const auto c = color_tree(t);
      CHECK(surjective(c));
      CHECK(c.num_colors() <= ceil_log2(n + 1));
      REQUIRE(is_cf_vertex_connected(t, c));
      CHECK(splitter_depth(t) <= ceil_log2(n + 1));
      CHECK(color_tree(t) == c);
    }
  }
}

TEST_CASE("color_tree on paths uses exactly ceil(log2(n+1)) colors") {
  for (int n = 1; n <= 512; ++n) {
    const Graph p = path_graph(n);
    const auto c = color_tree(p);
    REQUIRE(c.num_colors() == ceil_log2(n + 1));
    REQUIRE(is_cf_vertex_connected(p, c));
  }
}

TEST_CASE("color_graph") {
  for (const Graph& t : all_trees(8).members) CHECK(color_graph(t) == color_tree(t));

  const Graph c5 = cycle_graph(5);
  const auto cc5 = color_graph(c5);
  CHECK(cc5.num_colors() <= 3);
  CHECK(oracle::cf_vertex_connected(c5, cc5.colors));
  CHECK(is_cf_vertex_connected(c5, cc5));

  const auto k4 = color_graph(complete_graph(4));
  CHECK(k4.num_colors() <= 3);
  CHECK(is_cf_vertex_connected(complete_graph(4), k4));

  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : all_connected_graphs(n).members) {
      const auto c = color_graph(g);
      REQUIRE(c.num_colors() <= ceil_log2(n + 1));
      REQUIRE(is_cf_vertex_connected(g, c));
    }
  }
  CHECK_THROWS_AS(color_graph(Graph(4, {{0, 1}, {2, 3}})), DisconnectedError);
}

TEST_CASE("large trees color within the bound") {
  // A caterpillar and a broom, far beyond exhaustive range.
  std::vector<Edge> edges;
  const int spine = 400;
  for (Vertex i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
  for (Vertex i = 0; i < spine; ++i) edges.emplace_back(i, spine + i);
  const Graph caterpillar(2 * spine, edges);
  const auto c = color_tree(caterpillar);
  CHECK(c.num_colors() <= ceil_log2(2 * spine + 1));
  CHECK(is_cf_vertex_connected(caterpillar, c));

  edges.clear();
  for (Vertex i = 0; i + 1 < 300; ++i) edges.emplace_back(i, i + 1);
  for (Vertex i = 300; i < 700; ++i) edges.emplace_back(299, i);
  const Graph broom(700, edges);
  const auto b = color_tree(broom);
  CHECK(b.num_colors() <= ceil_log2(701));
  CHECK(is_cf_vertex_connected(broom, b));
}
