#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "toric_cli/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = toric::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string last_line(const std::string& s) {
  auto end = s.find_last_not_of('\n');
  auto start = s.rfind('\n', end);
  return s.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

fs::path scratch() {
  fs::path dir = fs::temp_directory_path() / "toricgraph_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("gen-grn then blocks") {
  std::string g = (scratch() / "g.txt").string();
  auto gen = run({"gen-grn", "--n", "3", "--r", "1", "--out", g});
  REQUIRE(gen.code == 0);
  auto blocks = run({"blocks", g});
  CHECK(blocks.code == 0);
  CHECK(last_line(blocks.out) == "4 blocks, 3 cut vertices, max block distance 1");

  auto t = run({"circuits", g, "--max-degree-only"});
  CHECK(t.code == 0);
  CHECK(t.out == "t = 5\n");
  CHECK(run({"circuits", g, "--max-degree-only", "--cactus-fast"}).out == "t = 5\n");
}

TEST_CASE("missing file is a usage error") {
  auto r = run({"graver", "nonexistent.txt"});
  CHECK(r.code == 2);
  CHECK(r.err.find("nonexistent.txt") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  auto bad = run({"blocks", "--fixture", "K4", "--bogus"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("Usage") != std::string::npos);
  CHECK(run({"blocks", "--fixture", "nope"}).code == 2);
  CHECK(run({"graver", "--fixture", "K4", "--engine", "magic"}).code == 2);
  CHECK(run({"index", "--fixture", "K4"}).code == 2);
  CHECK(run({"index", "--fixture", "K4", "--circuit", "3"}).code == 2);

  std::string broken = (scratch() / "broken.txt").string();
  std::ofstream(broken) << "a b\nc\n";
  CHECK(run({"blocks", broken}).code == 2);
}

TEST_CASE("domain errors exit 1") {
  auto r = run({"circuits", "--fixture", "K4", "--cactus-fast"});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"gen-grn", "--n", "4", "--r", "1"}).code == 1);
  CHECK(run({"report", "--n", "4", "--rmax", "2"}).code == 1);
}

TEST_CASE("caps from the environment") {
  ::setenv("TORICGRAPH_CAPS", "subgraphs=3", 1);
  auto r = run({"graver", "--fixture", "K4"});
  ::unsetenv("TORICGRAPH_CAPS");
  CHECK(r.code == 1);
  CHECK(r.err.find("TORICGRAPH_CAPS") != std::string::npos);
  CHECK(run({"graver", "--fixture", "K4"}).code == 0);
}

TEST_CASE("circuits listing") {
  auto r = run({"circuits", "--fixture", "square"});
  CHECK(r.code == 0);
  CHECK(r.out == "e1*e3 - e2*e4\nt = 2\n");
  auto j = run({"circuits", "--fixture", "bowtie", "--json"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"t\": 3") != std::string::npos);
  CHECK(j.out.find("two-odd-cycles-one-vertex") != std::string::npos);
}

TEST_CASE("graver engines agree") {
  auto a = run({"graver", "--fixture", "K4", "--engine", "graph"});
  auto b = run({"graver", "--fixture", "K4", "--engine", "completion"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(last_line(a.out) == "3 elements, max degree 2");

  std::string m = (scratch() / "m.txt").string();
  std::ofstream(m) << "2 3\n1 0 1\n0 1 1\n";
  auto c = run({"graver", "--matrix", m, "--engine", "completion"});
  CHECK(c.code == 0);
  CHECK(c.out == "x1*x2 - x3\n1 element, max degree 2\n");
  CHECK(run({"graver", "--matrix", m}).code == 2);
  std::string short_m = (scratch() / "short.txt").string();
  std::ofstream(short_m) << "2 3\n1 0 1\n";
  CHECK(run({"graver", "--matrix", short_m, "--engine", "completion"}).code == 2);
}

TEST_CASE("primitive-check and index") {
  auto p = run({"primitive-check", "--fixture", "square-pendant-triangle"});
  CHECK(p.code == 0);
  CHECK(p.out.find("not primitive") == 0);
  auto q = run({"primitive-check", "--fixture", "bowtie"});
  CHECK(q.out.find("primitive: valid block structure") == 0);

  auto i = run({"index", "--fixture", "bowtie", "--circuit", "0"});
  CHECK(i.code == 0);
  CHECK(i.out.find("degree: 3\nindex: 1\ntrue degree: 3\n") != std::string::npos);
}

TEST_CASE("report") {
  auto r = run({"report", "--n", "3", "--rmax", "6", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("r,graver_degree,t,edges,vertices,deg2_count,blocks,max_block_distance\n") == 0);
  CHECK(r.out.find("\n6,285,25,") != std::string::npos);
  auto t = run({"report", "--n", "5", "--rmax", "2"});
  CHECK(t.code == 0);
  CHECK(t.out.find("65") != std::string::npos);
}
