#include <doctest.h>

#include <algorithm>

#include "toric/error.hpp"
#include "toric/fixtures.hpp"
#include "toric/graph.hpp"
#include "toric/grn.hpp"
#include "toric/toric_model.hpp"

using namespace toric;

TEST_CASE("incidence configuration") {
  auto tri = incidence_configuration(fixture("triangle"));
  CHECK(tri.rows() == 3);
  CHECK(tri.cols() == 3);
  CHECK(tri.rank() == 3);
  for (std::size_t c = 0; c < 3; ++c) {
    std::int64_t w = 0;
    for (std::size_t r = 0; r < 3; ++r) w += tri.entry(r, c);
    CHECK(w == 2);
  }

  auto sq = incidence_configuration(fixture("square"));
  CHECK(sq.rows() == 4);
  CHECK(sq.cols() == 4);
  CHECK(sq.rank() == 3);
  CHECK(sq.annihilates(std::vector<Exponent>{1, -1, 1, -1}));

  Graph e;
  e.add_edge("x", "y");
  auto one = incidence_configuration(e);
  CHECK(one.rows() == 2);
  CHECK(one.cols() == 1);
  CHECK(one.entry(0, 0) == 1);
  CHECK(one.entry(1, 0) == 1);
  CHECK(one.is_nonnegative_pointed());
}

TEST_CASE("a_degree") {
  auto sq = incidence_configuration(fixture("square"));
  auto d = a_degree(std::vector<Exponent>{1, 0, 1, 0}, sq);
  CHECK(d == std::vector<BigInt>{1, 1, 1, 1});
  CHECK(a_degree(std::vector<Exponent>{0, 0, 0, 0}, sq) == std::vector<BigInt>(4, 0));
  auto tri = incidence_configuration(fixture("triangle"));
  CHECK(a_degree(std::vector<Exponent>{1, 1, 1}, tri) == std::vector<BigInt>{2, 2, 2});
  CHECK_THROWS_AS(a_degree(std::vector<Exponent>{1, -1, 0}, tri), InvalidArgument);
  CHECK_THROWS_AS(a_degree(std::vector<Exponent>{1, 1}, tri), InvalidArgument);
}

TEST_CASE("Binomial") {
  auto b = Binomial::from_exponents({-1, 1, -1, 1});
  CHECK(b[0] == 1);
  CHECK(b.degree() == 2);
  CHECK(b.to_string() == "e1*e3 - e2*e4");
  CHECK(b.support() == EdgeSet{0, 1, 2, 3});
  CHECK(Binomial::from_exponents({0, 2, -1, -2}).to_string("x") == "x2^2 - x3*x4^2");
  CHECK(Binomial::from_exponents({1, 0}).to_string() == "e1 - 1");
  CHECK_THROWS_AS(Binomial::from_exponents({0, 0, 0}), ZeroBinomial);
  CHECK(degree(std::vector<Exponent>{}) == 0);
  CHECK(degree(std::vector<Exponent>{0, 0}) == 0);
}

TEST_CASE("walk binomials") {
  Graph sq = fixture("square");
  Binomial b = binomial_of_walk({0, {0, 1, 2, 3}}, sq);
  CHECK(b.to_string() == "e1*e3 - e2*e4");
  CHECK(b.degree() == 2);

  // bowtie: a-b-c-a then c-d-e-c
  Graph bow = fixture("bowtie");
  VertexId a = bow.vertex("a");
  Binomial bw = binomial_of_walk({a, {0, 1, 3, 4, 5, 2}}, bow);
  CHECK(bw.degree() == 3);
  CHECK(bw.support().size() == 6);
  CHECK(incidence_configuration(bow).annihilates(bw.exponents()));

  Graph tri = fixture("triangle");
  CHECK_THROWS_AS(binomial_of_walk({0, {0, 1, 2, 0, 1, 2}}, tri), ZeroBinomial);
  CHECK_THROWS_AS(binomial_of_walk({0, {0, 1, 2}}, tri), InvalidArgument);
  CHECK_THROWS_AS(binomial_of_walk({0, {0, 1}}, sq), InvalidArgument);
}

TEST_CASE("Eulerian binomial of G_1^3 has degree 6") {
  Graph g = build_grn({3, 1});
  MultiGraph m = doubled_graph(g);
  ClosedWalk w = m.origin_walk(eulerian_trail(m));
  CHECK(binomial_of_walk(w, g).degree() == 6);
}

TEST_CASE("doubled graph") {
  MultiGraph m = doubled_graph(fixture("two-triangles-bridge"));
  CHECK(m.edge_count() == 8);
  for (VertexId v = 0; v < m.vertex_count(); ++v) CHECK(m.degree(v) % 2 == 0);
  CHECK(m.multiplicity(3) == 2);

  MultiGraph s = doubled_graph(fixture("square"));
  CHECK(s.edge_count() == 4);

  Graph e;
  e.add_edge("x", "y");
  MultiGraph me = doubled_graph(e);
  CHECK(me.edge_count() == 2);
  CHECK(me.degree(0) == 2);
  CHECK(me.degree(1) == 2);

  Graph two;
  two.add_edge("a", "b");
  two.add_edge("c", "d");
  CHECK_THROWS_AS(doubled_graph(two), InvalidArgument);
}
