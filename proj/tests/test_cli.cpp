#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "cfconn/cli.hpp"
#include "cfconn/coloring.hpp"
#include "cfconn/graph.hpp"
#include "cfconn/verify.hpp"

using namespace cfconn;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("cfconnect-test-" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("color") {
  Scratch s;
  const auto p7 = s.write("p7.txt", to_edge_list(path_graph(7)));
  const Run r = cli_run({"color", p7});
  CHECK(r.code == cli::kPass);
  CHECK(r.err == "n=7 colors=3 bound=3\n");
  CHECK(r.out == format_vertex_coloring(VertexColoring{{1, 2, 1, 3, 1, 2, 1}}));

  const auto k1 = s.write("k1.txt", "n 1\n");
  const Run one = cli_run({"color", k1, "-o", s.path("k1.col")});
  CHECK(one.code == cli::kPass);
  CHECK(one.out == "n=1 colors=1 bound=1\n");
  CHECK(slurp(s.path("k1.col")) == "0\t1\n");

  const auto c5 = s.write("c5.txt", to_edge_list(cycle_graph(5)));
  const Run cyc = cli_run({"color", c5, "-o", s.path("c5.col")});
  CHECK(cyc.code == cli::kPass);
  const auto coloring = parse_vertex_coloring(slurp(s.path("c5.col")), cycle_graph(5));
  CHECK(coloring.num_colors() <= 3);
  CHECK(is_cf_vertex_connected(cycle_graph(5), coloring));
  CHECK(cli_run({"verify", c5, s.path("c5.col")}).code == cli::kPass);
}

TEST_CASE("color output round-trips through verify") {
  Scratch s;
  const std::vector<Graph> graphs{path_graph(12), star_graph(9), complete_graph(5), cycle_graph(8),
                                  Graph(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}})};
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto g = s.write("g" + std::to_string(i) + ".txt", to_edge_list(graphs[i]));
    const auto col = s.path("g" + std::to_string(i) + ".col");
    REQUIRE(cli_run({"color", g, "-o", col}).code == cli::kPass);
    const Run v = cli_run({"verify", g, col, "--variant", "vertex"});
    CHECK(v.code == cli::kPass);
    CHECK(v.out == "pass\n");
  }
}

TEST_CASE("verify") {
  Scratch s;
  const auto p3 = s.write("p3.txt", "0 1\n1 2\n");
  CHECK(cli_run({"verify", p3, s.write("a.col", "0 1\n1 2\n2 1\n"), "--variant", "vertex"}).code == cli::kPass);

  const auto p4 = s.write("p4.txt", "0 1\n1 2\n2 3\n");
  const Run fail = cli_run({"verify", p4, s.write("ones.col", "0 1\n1 1\n2 1\n3 1\n")});
  CHECK(fail.code == cli::kVerifyFail);
  CHECK(fail.out == "fail pair=(0,3)\n");

  const auto k4 = s.write("k4.txt", to_edge_list(complete_graph(4)));
  const auto edge_ones = s.write("k4.ecol", "0 1 1\n0 2 1\n0 3 1\n1 2 1\n1 3 1\n2 3 1\n");
  CHECK(cli_run({"verify", k4, edge_ones, "--variant", "edge"}).code == cli::kPass);

  // Domain mismatch and malformed input are exit 2; disconnected is exit 3.
  CHECK(cli_run({"verify", p4, s.write("short.col", "0 1\n1 2\n")}).code == cli::kParseError);
  CHECK(cli_run({"verify", p4, s.write("bad.col", "0 x\n")}).code == cli::kParseError);
  const auto split = s.write("split.txt", "n 4\n0 1\n2 3\n");
  CHECK(cli_run({"verify", split, s.write("four.col", "0 1\n1 2\n2 1\n3 2\n")}).code == cli::kDisconnected);
}

TEST_CASE("verify cap on non-tree graphs") {
  Scratch s;
  const auto c17 = s.write("c17.txt", to_edge_list(cycle_graph(17)));
  std::string col;
  for (int v = 0; v < 17; ++v) col += std::to_string(v) + " " + std::to_string(v + 1) + "\n";
  const auto colfile = s.write("c17.col", col);
  const Run capped = cli_run({"verify", c17, colfile});
  CHECK(capped.code == cli::kCapExceeded);
  CHECK(capped.err.find("max-verify-n") != std::string::npos);
  CHECK(cli_run({"verify", c17, colfile, "--max-n", "17"}).code == cli::kPass);
}

TEST_CASE("exact") {
  Scratch s;
  const auto p7 = s.write("p7.txt", to_edge_list(path_graph(7)));
  const Run v = cli_run({"exact", p7, "--invariant", "vcfc"});
  CHECK(v.code == cli::kPass);
  CHECK(v.out.rfind("value=3\nexplored=", 0) == 0);

  const auto star = s.write("k15.txt", to_edge_list(star_graph(6)));
  const Run c = cli_run({"exact", star, "--invariant", "cfc", "--witness", s.path("k15.ecol")});
  CHECK(c.code == cli::kPass);
  CHECK(c.out.rfind("value=5\n", 0) == 0);
  const auto witness = parse_edge_coloring(slurp(s.path("k15.ecol")), star_graph(6));
  CHECK(is_cf_edge_connected(star_graph(6), witness));

  CHECK(cli_run({"exact", p7, "--invariant", "ranking"}).out.rfind("value=3\n", 0) == 0);

  const Run all = cli_run({"exact", p7, "--invariant", "all"});
  CHECK(all.out == "graph-id\tn\tvcfc\tcfc\tranking\np7\t7\t3\t3\t3\n");

  const auto g6 = s.write("k4.g6", "C~\n");
  CHECK(cli_run({"exact", g6, "--invariant", "cfc"}).out.rfind("value=1\n", 0) == 0);
}

TEST_CASE("exact caps") {
  Scratch s;
  const auto p11 = s.write("p11.txt", to_edge_list(path_graph(11)));
  const Run capped = cli_run({"exact", p11});
  CHECK(capped.code == cli::kCapExceeded);
  CHECK(capped.err.find("max-n") != std::string::npos);

  const Run raised = cli_run({"exact", p11, "--max-n", "11"});
  CHECK(raised.code == cli::kPass);
  CHECK(raised.out.rfind("value=4\n", 0) == 0);
  CHECK(raised.err.find("warning") != std::string::npos);

  const auto k6 = s.write("k6.txt", to_edge_list(complete_graph(6)));
  const Run edges = cli_run({"exact", k6, "--invariant", "cfc"});
  CHECK(edges.code == cli::kCapExceeded);
  CHECK(edges.err.find("max-edges") != std::string::npos);

  ::setenv("CFCONN_MAX_EDGES", "15", 1);
  CHECK(cli_run({"exact", k6, "--invariant", "cfc"}).code == cli::kPass);
  ::unsetenv("CFCONN_MAX_EDGES");
}

TEST_CASE("trees") {
  const Run r = cli_run({"trees", "4"});
  CHECK(r.code == cli::kPass);
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  std::getline(lines, line);
  CHECK(line == "key\tn\tedges");
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 2);
  CHECK(cli_run({"trees", "11"}).code == cli::kCapExceeded);
  CHECK(cli_run({"trees", "0"}).code == cli::kParseError);
}

TEST_CASE("check") {
  const auto footer = [](const std::string& out) { return out.substr(out.rfind("checked=")); };
  const Run t = cli_run({"check", "thm11", "5"});
  CHECK(t.code == cli::kPass);
  CHECK(footer(t.out) == "checked=21 violations=0\n");

  const Run c14 = cli_run({"check", "conj14", "7", "-j", "2"});
  CHECK(c14.code == cli::kPass);
  CHECK(footer(c14.out) == "checked=11 violations=0\n");

  const Run c31 = cli_run({"check", "conj31", "8"});
  CHECK(c31.code == cli::kPass);
  CHECK(footer(c31.out) == "checked=23 violations=0\n");
  CHECK(c31.out.find("# min cfc=") != std::string::npos);

  const Run mono = cli_run({"check", "mono", "4"});
  CHECK(mono.code == cli::kPass);
  CHECK(footer(mono.out) == "checked=6 violations=0\n");

  CHECK(cli_run({"check", "thm11", "7"}).code == cli::kCapExceeded);
  CHECK(cli_run({"check", "bogus", "5"}).code == cli::kParseError);

  // The same report with and without worker threads.
  CHECK(cli_run({"check", "conj31", "7", "-j", "1"}).out == cli_run({"check", "conj31", "7", "-j", "3"}).out);
}

TEST_CASE("usage and input errors") {
  CHECK(cli_run({}).code == cli::kParseError);
  CHECK(cli_run({"nonsense"}).code == cli::kParseError);
  CHECK(cli_run({"--help"}).code == cli::kPass);
  CHECK(cli_run({"color", "/nonexistent/graph.txt"}).code == cli::kParseError);

  Scratch s;
  CHECK(cli_run({"color", s.write("loop.txt", "0 0\n")}).code == cli::kParseError);
  const Run bad = cli_run({"color", s.write("bad.txt", "0 1\n1 q\n")});
  CHECK(bad.code == cli::kParseError);
  CHECK(bad.err.find("2") != std::string::npos);
  CHECK(cli_run({"color", s.write("split.txt", "n 4\n0 1\n2 3\n")}).code == cli::kDisconnected);
}

TEST_CASE("installed binary") {
  Scratch s;
  const auto p7 = s.write("p7.txt", to_edge_list(path_graph(7)));
  const std::string cmd = std::string(CFCONNECT_BIN) + " exact " + p7 + " > " + s.path("out.txt") + " 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(slurp(s.path("out.txt")).rfind("value=3\n", 0) == 0);

  const std::string cap = std::string(CFCONNECT_BIN) + " trees 11 > /dev/null 2>&1";
  const int capped = std::system(cap.c_str());
  REQUIRE(WIFEXITED(capped));
  CHECK(WEXITSTATUS(capped) == cli::kCapExceeded);
}
