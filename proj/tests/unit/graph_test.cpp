#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "oracles/oracles.hpp"
#include "toric/error.hpp"
#include "toric/fixtures.hpp"
#include "toric/graph.hpp"
#include "toric/graph_io.hpp"
#include "toric/grn.hpp"
#include "toric/limits.hpp"

using namespace toric;

namespace {

Graph single_vertex() {
  Graph g;
  g.add_vertex("x");
  return g;
}

Graph single_edge() {
  Graph g;
  g.add_edge("x", "y");
  return g;
}

std::size_t cut_vertex_count(const Graph& g) {
  // vertex whose removal disconnects the rest
  std::size_t count = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Graph h;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
      if (u != v) h.add_vertex(g.label(u));
    for (const Edge& e : g.edges())
      if (!e.touches(v)) h.add_edge(g.label(e.a), g.label(e.b));
    if (!h.is_connected()) ++count;
  }
  return count;
}

Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
  Graph g;
  for (std::size_t v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
  std::bernoulli_distribution coin(p);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g;
  auto a = g.add_vertex("a");
  auto b = g.add_vertex("b");
  CHECK_THROWS_AS(g.add_vertex("a"), InvalidArgument);
  CHECK_THROWS_AS(g.add_edge(a, a), InvalidArgument);
  auto e = g.add_edge(a, b);
  CHECK_THROWS_AS(g.add_edge(b, a), InvalidArgument);
  CHECK_THROWS_AS(g.add_edge(a, 7), InvalidArgument);
  CHECK(g.edge_between(b, a) == e);
  CHECK(g.degree(a) == 1);
  g.add_edge("b", "c");
  CHECK(g.vertex_count() == 3);
  CHECK(g.vertex("c") == 2);
  CHECK(g.is_connected());
  g.add_vertex("lonely");
  CHECK_FALSE(g.is_connected());
}

TEST_CASE("graph_sum") {
  Graph t = fixture("triangle");
  Graph bow = graph_sum(t, t, 0, 0, "t2.");
  CHECK(bow.vertex_count() == 5);
  CHECK(bow.edge_count() == 6);
  CHECK(cut_vertex_count(bow) == 1);

  Graph p2 = graph_sum(single_edge(), single_edge(), 1, 0, "q.");
  CHECK(p2.vertex_count() == 3);
  CHECK(p2.edge_count() == 2);
  CHECK(p2.degree(1) == 2);

  Graph same = graph_sum(t, single_vertex(), 2, 0, "z.");
  CHECK(same == t);

  CHECK_THROWS_AS(graph_sum(t, t, 0, 0, ""), InvalidArgument);
  CHECK_THROWS_AS(graph_sum(t, t, 9, 0, "p."), InvalidArgument);
}

TEST_CASE("add_cycle") {
  Graph t = fixture("triangle");
  Graph bow = add_cycle(t, 0, 3);
  CHECK(bow.vertex_count() == 5);
  CHECK(bow.edge_count() == 6);
  CHECK(cut_vertex_count(bow) == 1);

  Graph tri = add_cycle(single_vertex(), 0, 3);
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.edge_count() == 3);

  Graph big = add_cycle(t, 1, 5);
  CHECK(big.vertex_count() == 7);
  CHECK(big.edge_count() == 8);

  Graph twice = add_cycle(add_cycle(t, 0, 3), 0, 3);
  CHECK(twice.find_vertex("a/1.1"));
  CHECK(twice.find_vertex("a/2.2"));
  CHECK(add_cycle(t, 0, 3, 4).find_vertex("a/4.1"));

  CHECK_THROWS_AS(add_cycle(t, 0, 4), InvalidArgument);
  CHECK_THROWS_AS(add_cycle(t, 0, 1), InvalidArgument);
  CHECK_THROWS_AS(add_cycle(t, 5, 3), InvalidArgument);
}

TEST_CASE("enumerate_cycles on the documented cases") {
  auto sq = enumerate_cycles(fixture("square"), Parity::kAll);
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].size() == 4);

  Graph k4 = fixture("K4");
  auto odd = enumerate_cycles(k4, Parity::kOdd);
  auto even = enumerate_cycles(k4, Parity::kEven);
  CHECK(odd.size() == 4);
  CHECK(even.size() == 3);
  for (const auto& c : odd) CHECK(c.size() == 3);
  for (const auto& c : even) CHECK(c.size() == 4);

  CHECK_THROWS_AS(enumerate_cycles(k4, Parity::kAll, 3), CapExceeded);
  CHECK(enumerate_cycles(single_edge(), Parity::kAll).empty());
}

TEST_CASE("enumerate_cycles matches the vertex-subset oracle") {
  for (const auto& name : fixture_names()) {
    Graph g = fixture(name);
    if (g.vertex_count() > 9) continue;
    auto got = enumerate_cycles(g, Parity::kAll);
    std::set<std::vector<std::size_t>> got_set(got.begin(), got.end());
    CHECK_MESSAGE(got_set == oracle::cycles_by_vertex_subsets(g), name);
    CHECK(std::is_sorted(got.begin(), got.end()));
  }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(rng, 4 + trial % 4, 0.55);
    auto all = enumerate_cycles(g, Parity::kAll);
    auto want = oracle::cycles_by_vertex_subsets(g);
    CHECK(std::set<std::vector<std::size_t>>(all.begin(), all.end()) == want);
    auto odd = enumerate_cycles(g, Parity::kOdd);
    auto even = enumerate_cycles(g, Parity::kEven);
    CHECK(odd.size() + even.size() == want.size());
    for (const auto& c : odd) CHECK(c.size() % 2 == 1);
    for (const auto& c : even) CHECK(c.size() % 2 == 0);
  }
}

TEST_CASE("connecting_paths") {
  Graph g = fixture("two-triangles-bridge");
  auto paths = connecting_paths(g, EdgeSet{0, 1, 2}, EdgeSet{4, 5, 6});
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].edges == std::vector<EdgeId>{3});
  CHECK(g.label(paths[0].start) == "c");
  CHECK(g.label(paths[0].end(g)) == "d");

  Graph two;
  for (auto [a, b] : {std::pair{"a", "b"}, {"b", "c"}, {"c", "a"}, {"x", "y"}, {"y", "z"}, {"z", "x"}})
    two.add_edge(a, b);
  CHECK(connecting_paths(two, EdgeSet{0, 1, 2}, EdgeSet{3, 4, 5}).empty());

  CHECK_THROWS_AS(connecting_paths(fixture("bowtie"), EdgeSet{0, 1, 2}, EdgeSet{3, 4, 5}),
                  InvalidArgument);
}

TEST_CASE("connecting_paths between leaf triangles of G_1^3 match an edge-subset oracle") {
  Graph g = build_grn({3, 1});
  auto triangles = enumerate_cycles(g, Parity::kOdd);
  REQUIRE(triangles.size() == 4);
  auto leaf = [&](const std::string& at) {
    VertexId v = g.vertex(at + "/1.1");
    for (const auto& c : triangles)
      for (EdgeId e : c)
        if (g.edge(e).touches(v)) return c;
    FAIL("no leaf");
    return EdgeSet{};
  };
  EdgeSet c1 = leaf("c0.0"), c2 = leaf("c0.1");
  auto paths = connecting_paths(g, c1, c2);

  // oracle: every edge subset that is a simple path from V(c1) to V(c2)
  // with no other vertex on either cycle
  auto v1 = vertices_of(g, c1), v2 = vertices_of(g, c2);
  auto on = [](const std::vector<VertexId>& vs, VertexId v) {
    return std::find(vs.begin(), vs.end(), v) != vs.end();
  };
  std::multiset<std::size_t> want;
  for (std::uint32_t mask = 1; mask < (1u << g.edge_count()); ++mask) {
    std::vector<EdgeId> es;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (mask & (1u << e)) es.push_back(e);
    std::map<VertexId, int> deg;
    for (EdgeId e : es) {
      ++deg[g.edge(e).a];
      ++deg[g.edge(e).b];
    }
    std::vector<VertexId> ends;
    bool ok = true;
    for (auto [v, d] : deg) {
      if (d == 1) ends.push_back(v);
      else if (d != 2) ok = false;
      else if (on(v1, v) || on(v2, v)) ok = false;
    }
    if (!ok || ends.size() != 2) continue;
    bool joins = (on(v1, ends[0]) && on(v2, ends[1])) || (on(v2, ends[0]) && on(v1, ends[1]));
    if (!joins || on(v1, ends[0]) == on(v1, ends[1])) continue;
    if (!edge_subgraph(g, es).graph.is_connected()) continue;
    want.insert(es.size());
  }
  std::multiset<std::size_t> got;
  for (const auto& p : paths) got.insert(p.edges.size());
  CHECK(got == want);
  CHECK(got == std::multiset<std::size_t>{1, 2});
}

TEST_CASE("eulerian_trail") {
  Graph sq = fixture("square");
  auto m = MultiGraph::from_graph(sq);
  ClosedWalk w = eulerian_trail(m);
  CHECK(w.length() == 4);
  CHECK(is_closed_walk(m, w));

  Graph bow = fixture("bowtie");
  auto mb = MultiGraph::from_graph(bow);
  ClosedWalk wb = eulerian_trail(mb);
  CHECK(wb.length() == 6);
  CHECK(is_closed_walk(mb, wb));
  auto vs = walk_vertices(mb, wb);
  CHECK(std::count(vs.begin(), vs.end() - 1, bow.vertex("c")) == 2);

  Graph g13 = build_grn({3, 1});
  auto mg = MultiGraph::from_graph(g13);
  ClosedWalk wg = eulerian_trail(mg);
  CHECK(wg.length() == 12);
  auto sorted = wg.edges;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());

  CHECK_THROWS_AS(eulerian_trail(MultiGraph::from_graph(single_edge())), InvalidArgument);
  auto doubled_edge = MultiGraph::from_graph(single_edge(), std::vector<EdgeId>{0});
  CHECK(eulerian_trail(doubled_edge).length() == 2);
}

TEST_CASE("biconnected_edge_partition") {
  auto parts = biconnected_edge_partition(fixture("two-triangles-bridge"));
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == EdgeSet{0, 1, 2});
  CHECK(parts[1] == EdgeSet{3});
  CHECK(parts[2] == EdgeSet{4, 5, 6});
  CHECK(biconnected_edge_partition(fixture("K4")).size() == 1);
}

TEST_CASE("graph text format") {
  Graph g = parse_graph("# header\n a b \n\nb c # trailing\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(format_graph(g) == "a b\nb c\n");
  CHECK_THROWS_AS(parse_graph("a b\na\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("a b c\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("a a\n"), ParseError);
  try {
    parse_graph("a b\nb c\nq\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.txt"), FileError);
}

TEST_CASE("limits from text") {
  Limits l = Limits::parse("cycles=10, insertions=5");
  CHECK(l.max_cycles == 10);
  CHECK(l.max_insertions == 5);
  CHECK(l.max_subgraphs == Limits{}.max_subgraphs);
  CHECK(Limits::parse("").max_supports == Limits{}.max_supports);
  CHECK_THROWS_AS(Limits::parse("bogus=1"), InvalidArgument);
  CHECK_THROWS_AS(Limits::parse("cycles=x"), InvalidArgument);
  CHECK_THROWS_AS(Limits::parse("cycles"), InvalidArgument);
}
