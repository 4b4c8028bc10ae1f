#include "cfconn/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <optional>
#include <thread>

#include "cfconn/canonical.hpp"
#include "cfconn/error.hpp"
#include "cfconn/tree_color.hpp"
#include "cfconn/verify.hpp"

namespace cfconn {

namespace {

void require_order(int n, int lo, int hi, const char* what) {
  if (n < lo) throw ValidationError(std::string(what) + " requires n >= " + std::to_string(lo));
  if (n > hi) throw CapExceededError(std::string(what) + "-order", hi, n);
}

IsoClassCatalog to_catalog(int n, std::map<std::string, Graph> classes) {
  IsoClassCatalog out;
  out.order = n;
  for (auto& [key, g] : classes) {
    out.canonical_keys.push_back(key);
    out.members.push_back(std::move(g));
  }
  return out;
}

// Evaluates fn(i) for i in [0, count) on a small thread pool. Results land
// at their own index, so the output is independent of scheduling.
template <typename Fn>
auto parallel_map(std::size_t count, int jobs, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}));
  std::vector<std::optional<Result>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs) : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  std::vector<Result> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

struct Outcome {
  ReportRow row;
  std::optional<Violation> violation;
};

SearchReport assemble(std::string claim, int n, std::vector<std::string> columns, std::vector<Outcome> outcomes) {
  SearchReport report;
  report.claim = std::move(claim);
  report.order = n;
  report.columns = std::move(columns);
  for (auto& o : outcomes) {
    report.rows.push_back(std::move(o.row));
    if (o.violation) report.violations.push_back(std::move(*o.violation));
  }
  return report;
}

}  // namespace

IsoClassCatalog all_trees(int n) {
  require_order(n, 1, kMaxTreeOrder, "all_trees");
  std::map<std::string, Graph> level{{tree_canonical_key(Graph(1, {})), Graph(1, {})}};
  for (int m = 2; m <= n; ++m) {
    std::map<std::string, Graph> next;
    for (const auto& [key, t] : level) {
      auto edges = t.edges();
      for (Vertex v = 0; v < t.order(); ++v) {
        edges.emplace_back(v, m - 1);
        const Graph grown(m, edges);
        edges.pop_back();
        std::string k = tree_canonical_key(grown);
        if (!next.contains(k)) next.emplace(std::move(k), canonical_tree(grown));
      }
    }
    level = std::move(next);
  }
  return to_catalog(n, std::move(level));
}

IsoClassCatalog all_connected_graphs(int n) {
  require_order(n, 1, kMaxGraphOrder, "all_connected_graphs");
  std::map<std::string, Graph> level{{graph_canonical_key(Graph(1, {})), Graph(1, {})}};
  for (int m = 2; m <= n; ++m) {
    std::map<std::string, Graph> next;
    for (const auto& [key, g] : level) {
      const auto base = g.edges();
      for (unsigned subset = 1; subset < (1u << (m - 1)); ++subset) {
        auto edges = base;
        for (Vertex v = 0; v < m - 1; ++v) {
          if (subset & (1u << v)) edges.emplace_back(v, m - 1);
        }
        const Graph grown(m, edges);
        const auto code = minimal_adjacency_code(grown);
        std::string k = code_key(m, code.code);
        if (!next.contains(k)) next.emplace(std::move(k), grown.relabeled(code.perm));
      }
    }
    level = std::move(next);
  }
  return to_catalog(n, std::move(level));
}

SearchReport check_two_color_characterization(int n, const SweepOptions& options) {
  require_order(n, 3, 6, "thm11");
  const auto catalog = all_connected_graphs(n);
  auto outcomes = parallel_map(catalog.size(), options.jobs, [&](std::size_t i) {
    const Graph& g = catalog.members[i];
    const int vcfc = exact_vcfc(g, options.limits).value;
    const auto cuts = cut_vertices(g);
    const bool two_connected = is_two_connected(g);
    const bool predicted_two = two_connected || cuts.size() == 1;
    Outcome o;
    o.row = {catalog.canonical_keys[i],
             n,
             {std::to_string(vcfc), std::to_string(cuts.size()), two_connected ? "1" : "0",
              predicted_two ? "=2" : ">2"},
             (vcfc == 2) == predicted_two};
    if (!o.row.pass) {
      o.violation = Violation{catalog.canonical_keys[i], g, vcfc, 2,
                              predicted_two ? "expected vcfc=2" : "expected vcfc>2"};
    }
    return o;
  });
  return assemble("thm11", n, {"vcfc", "cut_vertices", "two_connected", "predicted"}, std::move(outcomes));
}

SearchReport check_path_bound(int n, const SweepOptions& options) {
  require_order(n, 2, 9, "conj14");
  const bool exact = n <= 8;
  const int bound = ceil_log2(n + 1);
  const auto catalog = all_trees(n);
  auto outcomes = parallel_map(catalog.size(), options.jobs, [&](std::size_t i) {
    const Graph& t = catalog.members[i];
    const auto coloring = color_tree(t);
    const int colors = coloring.num_colors();
    const bool verified = is_cf_vertex_connected(t, coloring);
    std::optional<int> vcfc;
    if (exact) vcfc = exact_vcfc(t, options.limits).value;
    Outcome o;
    o.row = {catalog.canonical_keys[i],
             n,
             {std::to_string(colors), verified ? "1" : "0", vcfc ? std::to_string(*vcfc) : "-",
              std::to_string(bound)},
             colors <= bound && verified && (!vcfc || *vcfc <= bound)};
    if (!o.row.pass) {
      const int observed = colors > bound || !verified ? colors : *vcfc;
      o.violation = Violation{catalog.canonical_keys[i], t, observed, bound,
                              verified ? "color count above bound" : "constructed coloring failed verification"};
    }
    return o;
  });
  auto report = assemble("conj14", n, {"colors", "verified", "vcfc", "bound"}, std::move(outcomes));
  report.extremal = summarize_extremes(report, exact ? "vcfc" : "colors");
  return report;
}

SearchReport check_cfc_lower_bound(int n, const SweepOptions& options) {
  require_order(n, 2, kMaxTreeOrder, "conj31");
  const int bound = ceil_log2(n);
  const auto catalog = all_trees(n);
  auto outcomes = parallel_map(catalog.size(), options.jobs, [&](std::size_t i) {
    const Graph& t = catalog.members[i];
    const int cfc = exact_cfc(t, options.limits).value;
    Outcome o;
    o.row = {catalog.canonical_keys[i], n, {std::to_string(cfc), std::to_string(bound)}, cfc >= bound};
    if (!o.row.pass) o.violation = Violation{catalog.canonical_keys[i], t, cfc, bound, "cfc below ceil(log2 n)"};
    return o;
  });
  auto report = assemble("conj31", n, {"cfc", "bound"}, std::move(outcomes));
  report.extremal = summarize_extremes(report, "cfc");
  return report;
}

SearchReport check_monotonicity(int n, int samples, const SweepOptions& options) {
  require_order(n, 1, 6, "mono");
  if (samples < 0) throw ValidationError("samples must be non-negative");
  const auto catalog = all_connected_graphs(n);
  // A connected spanning subgraph of order n is itself one of the classes,
  // so each invariant is computed once per class and looked up by key.
  struct Values {
    int vcfc;
    int cfc;
  };
  const auto values = parallel_map(catalog.size(), options.jobs, [&](std::size_t i) {
    const Graph& g = catalog.members[i];
    return Values{exact_vcfc(g, options.limits).value, exact_cfc(g, options.limits).value};
  });
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < catalog.size(); ++i) index.emplace(catalog.canonical_keys[i], i);

  const std::size_t count =
      samples > 0 ? std::min(catalog.size(), static_cast<std::size_t>(samples)) : catalog.size();
  auto outcomes = parallel_map(count, options.jobs, [&](std::size_t i) {
    const Graph& g = catalog.members[i];
    const Values& mine = values[i];
    int deletions = 0;
    std::optional<Values> least;
    std::optional<Violation> violation;
    for (auto [u, v] : g.edges()) {
      const Graph h = g.without_edge(u, v);
      if (!is_connected(h)) continue;
      ++deletions;
      const Values& sub = values[index.at(graph_canonical_key(h))];
      if (!least) least = sub;
      least->vcfc = std::min(least->vcfc, sub.vcfc);
      least->cfc = std::min(least->cfc, sub.cfc);
      if (!violation && (sub.vcfc < mine.vcfc || sub.cfc < mine.cfc)) {
        const bool vertex_side = sub.vcfc < mine.vcfc;
        violation = Violation{catalog.canonical_keys[i], g, vertex_side ? sub.vcfc : sub.cfc,
                              vertex_side ? mine.vcfc : mine.cfc,
                              std::string(vertex_side ? "vcfc" : "cfc") + " dropped after deleting edge " +
                                  std::to_string(u) + "-" + std::to_string(v)};
      }
    }
    Outcome o;
    o.row = {catalog.canonical_keys[i],
             n,
             {std::to_string(deletions), std::to_string(mine.vcfc), std::to_string(mine.cfc),
              least ? std::to_string(least->vcfc) : "-", least ? std::to_string(least->cfc) : "-"},
             !violation};
    o.violation = std::move(violation);
    return o;
  });
  return assemble("mono", n, {"deletions", "vcfc", "cfc", "min_sub_vcfc", "min_sub_cfc"}, std::move(outcomes));
}

}  // namespace cfconn
