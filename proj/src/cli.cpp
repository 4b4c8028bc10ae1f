#include "cfconn/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cfconn/canonical.hpp"
#include "cfconn/coloring.hpp"
#include "cfconn/enumerate.hpp"
#include "cfconn/error.hpp"
#include "cfconn/exact.hpp"
#include "cfconn/graph.hpp"
#include "cfconn/tree_color.hpp"
#include "cfconn/verify.hpp"

namespace cfconn::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << text;
}

Graph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  if (path.ends_with(".g6")) return parse_graph6(text);
  return parse_edge_list(text);
}

struct CapFlags {
  int max_n = 0;  // 0 = keep the default
  int max_edges = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--max-n", max_n, "vertex cap for exact search")->envname("CFCONN_MAX_N")->check(
        CLI::PositiveNumber);
    cmd->add_option("--max-edges", max_edges, "edge cap for exact cfc search")
        ->envname("CFCONN_MAX_EDGES")
        ->check(CLI::PositiveNumber);
  }

  SolverLimits apply(SolverLimits limits, std::ostream& err) const {
    if (max_n > 0) {
      if (max_n > limits.max_vertices) {
        err << "warning: raising vertex cap to " << max_n << "; search time grows exponentially\n";
      }
      limits.max_vertices = max_n;
    }
    if (max_edges > 0) {
      if (max_edges > limits.max_edges) {
        err << "warning: raising edge cap to " << max_edges << "; search time grows exponentially\n";
      }
      limits.max_edges = max_edges;
    }
    return limits;
  }
};

template <typename Coloring>
std::string witness_text(const Graph& g, const Coloring& c);

template <>
std::string witness_text(const Graph&, const VertexColoring& c) {
  return format_vertex_coloring(c);
}
template <>
std::string witness_text(const Graph& g, const EdgeColoring& c) {
  return format_edge_coloring(g, c);
}
template <>
std::string witness_text(const Graph&, const Ranking& r) {
  return format_vertex_coloring(VertexColoring{r.labels});
}

int cmd_color(const std::string& graph_path, const std::string& output, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(graph_path);
  require_connected(g, "color");
  const VertexColoring coloring = color_graph(g);
  const std::string summary = "n=" + std::to_string(g.order()) + " colors=" +
                              std::to_string(coloring.num_colors()) + " bound=" +
                              std::to_string(ceil_log2(g.order() + 1)) + "\n";
  if (output.empty()) {
    out << format_vertex_coloring(coloring);
    err << summary;
  } else {
    write_file(output, format_vertex_coloring(coloring));
    out << summary;
  }
  return kPass;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path, const std::string& variant,
               const VerifyOptions& options, std::ostream& out) {
  const Graph g = load_graph(graph_path);
  require_connected(g, "verify");
  const std::string text = read_file(coloring_path);
  const auto conflict = variant == "edge" ? first_edge_conflict(g, parse_edge_coloring(text, g), options)
                                          : first_vertex_conflict(g, parse_vertex_coloring(text, g), options);
  if (!conflict) {
    out << "pass\n";
    return kPass;
  }
  out << "fail pair=(" << conflict->first << "," << conflict->second << ")\n";
  return kVerifyFail;
}

template <typename Result>
void report_exact(const Graph& g, const Result& r, const std::string& witness_path, std::ostream& out) {
  out << "value=" << r.value << "\n";
  out << "explored=" << r.explored << "\n";
  const std::string text = witness_text(g, r.witness);
  if (witness_path.empty()) {
    out << text;
  } else {
    write_file(witness_path, text);
  }
}

int cmd_exact(const std::string& graph_path, const std::string& invariant, const std::string& witness_path,
              const SolverLimits& limits, std::ostream& out) {
  const Graph g = load_graph(graph_path);
  require_connected(g, "exact");
  if (invariant == "vcfc") {
    report_exact(g, exact_vcfc(g, limits), witness_path, out);
  } else if (invariant == "cfc") {
    report_exact(g, exact_cfc(g, limits), witness_path, out);
  } else if (invariant == "ranking") {
    report_exact(g, exact_ranking(g, limits), witness_path, out);
  } else {
    const std::string id = std::filesystem::path(graph_path).stem().string();
    out << "graph-id\tn\tvcfc\tcfc\tranking\n";
    out << id << "\t" << g.order() << "\t" << exact_vcfc(g, limits).value << "\t" << exact_cfc(g, limits).value
        << "\t" << exact_ranking(g, limits).value << "\n";
  }
  return kPass;
}

int cmd_trees(int n, std::ostream& out) {
  const auto catalog = all_trees(n);
  out << "key\tn\tedges\n";
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    out << catalog.canonical_keys[i] << "\t" << n << "\t";
    bool first = true;
    for (auto [u, v] : catalog.members[i].edges()) {
      out << (first ? "" : ",") << u << "-" << v;
      first = false;
    }
    out << "\n";
  }
  return kPass;
}

int cmd_check(const std::string& claim, int n, int samples, const SweepOptions& options, const std::string& output,
              std::ostream& out, std::ostream& err) {
  SearchReport report;
  if (claim == "thm11") {
    report = check_two_color_characterization(n, options);
  } else if (claim == "conj14") {
    report = check_path_bound(n, options);
  } else if (claim == "conj31") {
    report = check_cfc_lower_bound(n, options);
  } else {
    report = check_monotonicity(n, samples, options);
  }
  const std::string tsv = format_report_tsv(report);
  if (output.empty()) {
    out << tsv;
  } else {
    write_file(output, tsv);
    out << "checked=" << report.checked() << " violations=" << report.violations.size() << "\n";
  }
  if (report.holds()) return kPass;
  err << format_violations(report);
  return kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conflict-free vertex-connection colorings, exact solvers and exhaustive sweeps", "cfconnect"};
  app.require_subcommand(1);

  std::string graph_path, coloring_path, output, witness_path;
  std::string variant = "vertex";
  std::string invariant = "vcfc";
  std::string claim;
  int order = 0;
  int samples = 0;
  int jobs = 0;
  int verify_max_n = VerifyOptions{}.max_vertices;
  CapFlags exact_caps, check_caps;

  auto* color = app.add_subcommand("color", "color a connected graph with at most ceil(log2(n+1)) colors");
  color->add_option("graph", graph_path, "edge-list file (.g6 for graph6)")->required();
  color->add_option("-o,--output", output, "write the coloring here instead of stdout");

  auto* verify = app.add_subcommand("verify", "check that a coloring is conflict-free connecting");
  verify->add_option("graph", graph_path)->required();
  verify->add_option("coloring", coloring_path)->required();
  verify->add_option("--variant", variant, "vertex or edge")->check(CLI::IsMember({"vertex", "edge"}));
  verify->add_option("--max-n", verify_max_n, "order cap for all-paths verification")
      ->envname("CFCONN_VERIFY_MAX_N")
      ->check(CLI::PositiveNumber);

  auto* exact = app.add_subcommand("exact", "compute an invariant exactly by exhaustive search");
  exact->add_option("graph", graph_path)->required();
  exact->add_option("--invariant", invariant)->check(CLI::IsMember({"vcfc", "cfc", "ranking", "all"}));
  exact->add_option("--witness", witness_path, "write the witness here instead of stdout");
  exact_caps.add_to(exact);

  auto* trees = app.add_subcommand("trees", "list one tree per isomorphism class");
  trees->add_option("n", order)->required();

  auto* check = app.add_subcommand("check", "run an exhaustive sweep and report violations");
  check->add_option("claim", claim)->required()->check(CLI::IsMember({"thm11", "conj14", "conj31", "mono"}));
  check->add_option("n", order)->required();
  check->add_option("--samples", samples, "mono: limit to the first N classes (0 = all)")
      ->check(CLI::NonNegativeNumber);
  check->add_option("-j,--jobs", jobs, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  check->add_option("-o,--output", output, "write the TSV report here");
  check_caps.add_to(check);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kParseError;
  }

  try {
    if (*color) return cmd_color(graph_path, output, out, err);
    if (*verify) {
      VerifyOptions options;
      if (verify_max_n > options.max_vertices) {
        err << "warning: raising all-paths verification cap to " << verify_max_n << "\n";
      }
      options.max_vertices = verify_max_n;
      return cmd_verify(graph_path, coloring_path, variant, options, out);
    }
    if (*exact) return cmd_exact(graph_path, invariant, witness_path, exact_caps.apply({}, err), out);
    if (*trees) return cmd_trees(order, out);
    SweepOptions options;
    options.limits = check_caps.apply(options.limits, err);
    options.jobs = jobs;
    return cmd_check(claim, order, samples, options, output, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::parse:
      case ErrorKind::validation:
        return kParseError;
      case ErrorKind::disconnected:
        return kDisconnected;
      case ErrorKind::cap_exceeded:
        return kCapExceeded;
    }
  }
  return kParseError;
}

}  // namespace cfconn::cli
