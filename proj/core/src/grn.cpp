#include "toric/grn.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

#include "toric/blocks.hpp"
#include "toric/circuits.hpp"
#include "toric/error.hpp"
#include "toric/graver.hpp"
#include "toric/lattice.hpp"
#include "toric/primitivity.hpp"

namespace toric {

namespace {

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow("G_r^n closed form exceeds 64 bits");
  return out;
}

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Overflow("G_r^n closed form exceeds 64 bits");
  return out;
}

std::uint64_t power(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out = mul(out, base);
  return out;
}

// ((n-1)^r - 1) / (n-2) = 1 + (n-1) + ... + (n-1)^(r-1), exact.
std::uint64_t geometric(const GrnParams& p) {
  return (power(p.n - 1, p.r) - 1) / (p.n - 2);
}

void require_positive_round(const GrnParams& p, const char* what) {
  p.validate();
  if (p.r == 0) throw InvalidArgument(std::string(what) + " is undefined for r = 0");
}

std::vector<VertexId> degree2_in_label_order(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 2) out.push_back(v);
  std::sort(out.begin(), out.end(),
            [&](VertexId a, VertexId b) { return g.label(a) < g.label(b); });
  return out;
}

void check(bool ok, const std::string& what) {
  if (!ok) throw ConsistencyError("separation report: " + what);
}

}  // namespace

void GrnParams::validate() const {
  if (n < 3 || n % 2 == 0) {
    throw InvalidArgument("G_r^n needs an odd cycle length n >= 3, got " + std::to_string(n));
  }
}

Graph build_grn(const GrnParams& p) {
  p.validate();
  Graph g = cycle_graph(p.n, "c0.");
  for (std::size_t s = 1; s <= p.r; ++s) {
    for (VertexId v : degree2_in_label_order(g)) {
      std::string prefix = g.label(v) + "/" + std::to_string(s) + ".";
      VertexId prev = v;
      for (std::size_t i = 1; i < p.n; ++i) {
        VertexId x = g.add_vertex(prefix + std::to_string(i));
        g.add_edge(prev, x);
        prev = x;
      }
      g.add_edge(prev, v);
    }
  }
  return g;
}

Graph build_grn_by_add_cycle(const GrnParams& p) {
  p.validate();
  Graph g = cycle_graph(p.n, "c0.");
  for (std::size_t s = 1; s <= p.r; ++s) {
    for (VertexId v : degree2_in_label_order(g)) g = add_cycle(g, v, p.n, s);
  }
  return g;
}

std::uint64_t grn_graver_degree(const GrnParams& p) {
  require_positive_round(p, "the Graver degree");
  return grn_edge_count(p) / 2;
}

std::uint64_t grn_circuit_bound(const GrnParams& p) {
  require_positive_round(p, "the circuit bound");
  return add(p.n, mul(2 * p.r - 1, p.n - 1));
}

std::uint64_t grn_degree2_count(const GrnParams& p) {
  p.validate();
  return mul(p.n, power(p.n - 1, p.r));
}

std::uint64_t grn_edge_count(const GrnParams& p) {
  p.validate();
  return add(p.n, mul(mul(p.n, p.n), geometric(p)));
}

std::uint64_t grn_vertex_count(const GrnParams& p) {
  p.validate();
  return add(p.n, mul(mul(p.n, p.n - 1), geometric(p)));
}

std::uint64_t grn_block_count(const GrnParams& p) {
  p.validate();
  return add(1, mul(p.n, geometric(p)));
}

std::size_t count_degree2(const Graph& g) {
  std::size_t c = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) c += g.degree(v) == 2 ? 1 : 0;
  return c;
}

SeparationReport separation_report(std::size_t n, std::size_t r_max, const ReportOptions& options) {
  GrnParams base{n, 0};
  base.validate();
  if (r_max == 0) throw InvalidArgument("separation_report: r_max must be at least 1");

  SeparationReport report;
  report.n = n;
  for (std::size_t r = 1; r <= r_max; ++r) {
    const GrnParams p{n, r};
    const Graph g = build_grn(p);
    SeparationRow row;
    row.r = r;

    const Binomial b = binomial_of_walk(eulerian_trail(MultiGraph::from_graph(g)), g);
    row.graver_degree = static_cast<std::uint64_t>(b.degree());
    check(row.graver_degree == grn_graver_degree(p), "Eulerian binomial degree differs from closed form");
    check(is_primitive_subgraph(g).primitive, "G_r^n failed the primitivity test");

    const CactusCircuitWitness w = cactus_circuit_witness(g);
    row.t = static_cast<std::uint64_t>(w.degree);
    row.witness_block1 = w.block1;
    row.witness_block2 = w.block2;
    row.witness_path_length = w.path_length;
    check(row.t == grn_circuit_bound(p), "largest circuit degree differs from the bound");

    row.edges = g.edge_count();
    row.vertices = g.vertex_count();
    row.deg2_count = count_degree2(g);
    check(row.deg2_count == grn_degree2_count(p), "degree-two vertex count differs");
    const BlockDecomposition d = block_decomposition(g);
    row.blocks = d.blocks.size();
    row.max_block_distance = max_block_distance(block_tree(d));
    check(row.max_block_distance == 2 * r - 1, "largest block distance differs from 2r-1");

    if (r <= options.verify_up_to) {
      check(max_circuit_degree(g, options.limits.max_cycles) == static_cast<Exponent>(row.t),
            "circuit enumeration disagrees with the block-tree maximum");
      row.enumeration_checked = true;
    }
    if (r <= options.completion_up_to && g.edge_count() <= options.completion_max_edges) {
      const GraverSet graver = graver_completion(incidence_configuration(g), options.limits.max_insertions);
      SignedVector v{{b.exponents().begin(), b.exponents().end()}};
      check(graver.contains(v) && is_conformally_minimal(v, graver),
            "completion engine does not contain the Eulerian binomial");
      row.completion_checked = true;
    }
    report.rows.push_back(row);
  }
  return report;
}

std::string reduced_fraction(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  std::uint64_t g = std::gcd(num, den);
  return std::to_string(num / g) + "/" + std::to_string(den / g);
}

std::string decimal3(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  // Round half up on the exact quotient.
  const BigInt d{std::to_string(den)};
  BigInt q = (BigInt{std::to_string(num)} * 1000 + d / 2) / d;
  BigInt whole = q / 1000;
  unsigned long frac = BigInt(q % 1000).get_ui();
  std::ostringstream out;
  out << whole << '.' << std::setw(3) << std::setfill('0') << frac;
  return out.str();
}

void write_report_table(std::ostream& out, const SeparationReport& report) {
  out << "n = " << report.n << '\n';
  out << std::left << std::setw(4) << "r" << std::setw(10) << "graver" << std::setw(6) << "t"
      << std::setw(8) << "edges" << std::setw(10) << "vertices" << std::setw(8) << "deg2"
      << std::setw(8) << "blocks" << std::setw(7) << "dmax" << std::setw(18) << "graver/t"
      << std::setw(20) << "graver/t^2" << "checks\n";
  for (const SeparationRow& row : report.rows) {
    std::string ratio = reduced_fraction(row.graver_degree, row.t) + " (" +
                        decimal3(row.graver_degree, row.t) + ")";
    std::uint64_t t2 = row.t * row.t;
    std::string ratio2 = reduced_fraction(row.graver_degree, t2) + " (" +
                         decimal3(row.graver_degree, t2) + ")";
    std::string checks = "formulas";
    if (row.enumeration_checked) checks += ",enumeration";
    if (row.completion_checked) checks += ",completion";
    out << std::left << std::setw(4) << row.r << std::setw(10) << row.graver_degree << std::setw(6)
        << row.t << std::setw(8) << row.edges << std::setw(10) << row.vertices << std::setw(8)
        << row.deg2_count << std::setw(8) << row.blocks << std::setw(7) << row.max_block_distance
        << std::setw(18) << ratio << std::setw(20) << ratio2 << checks << '\n';
  }
  for (const SeparationRow& row : report.rows) {
    out << "r = " << row.r << ": t attained by blocks " << row.witness_block1 << " and "
        << row.witness_block2 << ", path length " << row.witness_path_length << '\n';
  }
  out << std::right;
}

void write_report_csv(std::ostream& out, const SeparationReport& report) {
  out << "r,graver_degree,t,edges,vertices,deg2_count,blocks,max_block_distance\n";
  for (const SeparationRow& row : report.rows) {
    out << row.r << ',' << row.graver_degree << ',' << row.t << ',' << row.edges << ','
        << row.vertices << ',' << row.deg2_count << ',' << row.blocks << ','
        << row.max_block_distance << '\n';
  }
}

}  // namespace toric
