#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "toric/graph.hpp"
#include "toric/limits.hpp"

namespace toric {

// Parameters of the recursive odd-cycle cactus G_r^n: n is the cycle length
// (odd, at least 3), r the number of rounds of attaching cycles.
struct GrnParams {
  std::size_t n = 3;
  std::size_t r = 0;

  // Throws InvalidArgument unless n is odd and at least 3.
  void validate() const;
};

// G_0^n is the cycle c0.0 ... c0.(n-1); round s attaches an n-cycle at every
// vertex of degree two (in label order), the cycle added at v having
// vertices v/s.1 ... v/s.(n-1).
Graph build_grn(const GrnParams& p);

// Same graph built literally with add_cycle, one cycle at a time.
Graph build_grn_by_add_cycle(const GrnParams& p);

// Closed forms. The degree and bound forms require r >= 1 and throw
// InvalidArgument for r == 0; all throw Overflow past 64 bits.
std::uint64_t grn_graver_degree(const GrnParams& p);   // (n + n^2((n-1)^r-1)/(n-2)) / 2
std::uint64_t grn_circuit_bound(const GrnParams& p);   // n + (2r-1)(n-1)
std::uint64_t grn_degree2_count(const GrnParams& p);   // n (n-1)^r
std::uint64_t grn_edge_count(const GrnParams& p);      // n + n^2((n-1)^r-1)/(n-2)
std::uint64_t grn_vertex_count(const GrnParams& p);    // n + n(n-1)((n-1)^r-1)/(n-2)
std::uint64_t grn_block_count(const GrnParams& p);     // 1 + n((n-1)^r-1)/(n-2)

// Number of vertices of degree two.
std::size_t count_degree2(const Graph& g);

struct SeparationRow {
  std::size_t r = 0;
  std::uint64_t graver_degree = 0;
  std::uint64_t t = 0;
  std::size_t edges = 0;
  std::size_t vertices = 0;
  std::size_t deg2_count = 0;
  std::size_t blocks = 0;
  std::size_t max_block_distance = 0;
  // Block pair and path length of one circuit of degree t.
  std::size_t witness_block1 = 0;
  std::size_t witness_block2 = 0;
  std::size_t witness_path_length = 0;
  bool enumeration_checked = false;
  bool completion_checked = false;
};

struct SeparationReport {
  std::size_t n = 3;
  std::vector<SeparationRow> rows;
};

struct ReportOptions {
  std::size_t verify_up_to = 2;            // full circuit enumeration for r <= this
  std::size_t completion_up_to = 1;        // completion-engine check for r <= this
  std::size_t completion_max_edges = 14;   // ... and only when the graph is this small
  Limits limits{};
};

// Builds G_r^n for r = 1..r_max and measures the Eulerian Graver element,
// the largest circuit degree and the block structure, checking each against
// the closed forms. A disagreement raises ConsistencyError.
SeparationReport separation_report(std::size_t n, std::size_t r_max, const ReportOptions& options = {});

// "a/b" in lowest terms and the decimal value to three places.
std::string reduced_fraction(std::uint64_t num, std::uint64_t den);
std::string decimal3(std::uint64_t num, std::uint64_t den);

void write_report_table(std::ostream& out, const SeparationReport& report);
// Header r,graver_degree,t,edges,vertices,deg2_count,blocks,max_block_distance.
void write_report_csv(std::ostream& out, const SeparationReport& report);

}  // namespace toric
