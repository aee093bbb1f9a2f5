#include <doctest.h>

#include <sstream>

#include "toric/blocks.hpp"
#include "toric/circuits.hpp"
#include "toric/error.hpp"
#include "toric/grn.hpp"
#include "toric/primitivity.hpp"

using namespace toric;

namespace {

// Vertex count by the recurrence V_s = V_{s-1} + (n-1) * n (n-1)^{s-1}.
std::uint64_t vertices_by_recurrence(std::uint64_t n, std::uint64_t r) {
  std::uint64_t v = n, deg2 = n;
  for (std::uint64_t s = 1; s <= r; ++s) {
    v += (n - 1) * deg2;
    deg2 *= n - 1;
  }
  return v;
}

}  // namespace

TEST_CASE("construction sizes") {
  Graph g0 = build_grn({3, 0});
  CHECK(g0.vertex_count() == 3);
  CHECK(g0.edge_count() == 3);

  Graph g1 = build_grn({3, 1});
  CHECK(g1.vertex_count() == 9);
  CHECK(g1.edge_count() == 12);
  CHECK(count_degree2(g1) == 6);

  Graph g3 = build_grn({3, 3});
  CHECK(g3.edge_count() == 66);
  CHECK(g3.vertex_count() == 45);
  CHECK(vertices_by_recurrence(3, 3) == 45);

  CHECK_THROWS_AS(build_grn({4, 1}), InvalidArgument);
  CHECK_THROWS_AS(build_grn({1, 1}), InvalidArgument);
}

TEST_CASE("direct construction equals repeated add_cycle") {
  for (std::size_t n : {3, 5})
    for (std::size_t r = 0; r <= 3; ++r) CHECK(build_grn({n, r}) == build_grn_by_add_cycle({n, r}));
}

TEST_CASE("closed forms") {
  CHECK(grn_graver_degree({3, 1}) == 6);
  CHECK(grn_graver_degree({3, 4}) == 69);
  CHECK(grn_graver_degree({5, 2}) == 65);
  CHECK(grn_circuit_bound({3, 1}) == 5);
  CHECK(grn_circuit_bound({3, 2}) == 9);
  CHECK(grn_circuit_bound({5, 2}) == 17);
  CHECK(grn_degree2_count({3, 0}) == 3);
  CHECK(grn_degree2_count({3, 1}) == 6);
  CHECK(grn_degree2_count({3, 2}) == 12);
  CHECK_THROWS_AS(grn_graver_degree({3, 0}), InvalidArgument);
  CHECK_THROWS_AS(grn_circuit_bound({3, 0}), InvalidArgument);
  CHECK_THROWS_AS(grn_graver_degree({3, 80}), Overflow);
}

TEST_CASE("constructed graphs agree with closed forms") {
  for (std::size_t n : {3, 5}) {
    for (std::size_t r = 1; r <= 4; ++r) {
      GrnParams p{n, r};
      Graph g = build_grn(p);
      CAPTURE(n);
      CAPTURE(r);
      CHECK(g.edge_count() == grn_edge_count(p));
      CHECK(g.edge_count() == 2 * grn_graver_degree(p));
      CHECK(g.vertex_count() == grn_vertex_count(p));
      CHECK(g.vertex_count() == vertices_by_recurrence(n, r));
      CHECK(count_degree2(g) == grn_degree2_count(p));
      auto d = block_decomposition(g);
      CHECK(d.blocks.size() == grn_block_count(p));
      CHECK(max_block_distance(block_tree(d)) == 2 * r - 1);
      CHECK(static_cast<std::uint64_t>(grn_primitive_binomial(n, r).degree()) == grn_graver_degree(p));
      CHECK(is_primitive_subgraph(g).primitive);
      CHECK(static_cast<std::uint64_t>(max_circuit_degree_cactus(g)) == grn_circuit_bound(p));
    }
  }
}

TEST_CASE("no even cycles") {
  for (std::size_t r = 0; r <= 3; ++r) CHECK(enumerate_cycles(build_grn({3, r}), Parity::kEven).empty());
}

TEST_CASE("separation report") {
  SeparationReport rep = separation_report(3, 6);
  REQUIRE(rep.rows.size() == 6);
  std::vector<std::uint64_t> graver, t;
  for (const auto& row : rep.rows) {
    graver.push_back(row.graver_degree);
    t.push_back(row.t);
  }
  CHECK(graver == std::vector<std::uint64_t>{6, 15, 33, 69, 141, 285});
  CHECK(t == std::vector<std::uint64_t>{5, 9, 13, 17, 21, 25});
  CHECK(rep.rows[0].enumeration_checked);
  CHECK(rep.rows[1].enumeration_checked);
  CHECK_FALSE(rep.rows[2].enumeration_checked);
  CHECK(rep.rows[0].completion_checked);
  for (const auto& row : rep.rows) {
    CAPTURE(row.r);
    CHECK(3 + row.witness_path_length == row.t);
    auto d = block_decomposition(build_grn({3, row.r}));
    CHECK(block_distance(block_tree(d), row.witness_block1, row.witness_block2) * 2 == row.witness_path_length);
  }

  SeparationReport five = separation_report(5, 2);
  CHECK(five.rows[0].graver_degree == 15);
  CHECK(five.rows[1].graver_degree == 65);
  CHECK(five.rows[0].t == 9);
  CHECK(five.rows[1].t == 17);

  ReportOptions quick;
  quick.verify_up_to = 0;
  quick.completion_up_to = 0;
  SeparationReport eight = separation_report(3, 8, quick);
  const auto& last = eight.rows.back();
  CHECK(last.graver_degree == 1149);
  CHECK(last.t == 33);
  CHECK(last.graver_degree > last.t * last.t);
  for (std::size_t i = 1; i < eight.rows.size(); ++i) {
    // a/b < c/d  <=>  a*d < c*b
    const auto& p = eight.rows[i - 1];
    const auto& q = eight.rows[i];
    CHECK(p.graver_degree * q.t < q.graver_degree * p.t);
  }
  CHECK_THROWS_AS(separation_report(4, 2), InvalidArgument);
}

TEST_CASE("report output") {
  CHECK(reduced_fraction(1149, 1089) == "383/363");
  CHECK(decimal3(1149, 1089) == "1.055");
  CHECK(decimal3(2, 3) == "0.667");
  CHECK(decimal3(1, 8) == "0.125");
  CHECK(reduced_fraction(6, 3) == "2/1");

  ReportOptions quick;
  quick.verify_up_to = 0;
  quick.completion_up_to = 0;
  std::ostringstream csv;
  write_report_csv(csv, separation_report(3, 2, quick));
  CHECK(csv.str() ==
        "r,graver_degree,t,edges,vertices,deg2_count,blocks,max_block_distance\n"
        "1,6,5,12,9,6,4,1\n"
        "2,15,9,30,21,12,10,3\n");
  std::ostringstream table;
  write_report_table(table, separation_report(3, 2, quick));
  CHECK(table.str().find("6/5 (1.200)") != std::string::npos);
}
