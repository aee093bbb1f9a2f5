#include "toric_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "toric/blocks.hpp"
#include "toric/circuit_index.hpp"
#include "toric/circuits.hpp"
#include "toric/error.hpp"
#include "toric/fixtures.hpp"
#include "toric/graph_io.hpp"
#include "toric/graver.hpp"
#include "toric/grn.hpp"
#include "toric/limits.hpp"
#include "toric/primitivity.hpp"

namespace toric::cli {
namespace {

using nlohmann::json;

// Input errors that are the caller's fault rather than a domain failure.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string file;
  std::string fixture;

  void attach(CLI::App* cmd) {
    cmd->add_option("file", file, "graph file (one edge per line)");
    cmd->add_option("--fixture", fixture, "bundled graph instead of a file");
  }

  bool given() const { return !file.empty() || !fixture.empty(); }

  Graph load() const {
    if (!file.empty() && !fixture.empty()) throw UsageError("give either a file or --fixture, not both");
    if (!fixture.empty()) {
      const auto& names = fixture_names();
      if (std::find(names.begin(), names.end(), fixture) == names.end())
        throw UsageError("unknown fixture '" + fixture + "'");
      return toric::fixture(fixture);
    }
    if (file.empty()) throw UsageError("a graph file or --fixture is required");
    try {
      return read_graph_file(file);
    } catch (const FileError& e) {
      throw UsageError(e.what());
    } catch (const ParseError& e) {
      throw UsageError(file + ": " + e.what());
    }
  }
};

ToricConfiguration read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open matrix file '" + path + "'");
  long long rows = -1, cols = -1;
  if (!(in >> rows >> cols) || rows <= 0 || cols <= 0)
    throw UsageError(path + ": expected a header 'rows cols' with positive sizes");
  std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(rows),
                                           std::vector<std::int64_t>(static_cast<std::size_t>(cols)));
  for (auto& row : m)
    for (auto& x : row)
      if (!(in >> x)) throw UsageError(path + ": expected " + std::to_string(rows * cols) + " integers");
  std::string extra;
  if (in >> extra) throw UsageError(path + ": trailing input '" + extra + "'");
  return ToricConfiguration::from_rows(m);
}

json binomial_json(const Binomial& b) {
  json entries = json::array();
  for (auto [col, e] : b.sparse_entries()) entries.push_back({{"edge", col}, {"exponent", e}});
  return {{"binomial", b.to_string()}, {"degree", b.degree()}, {"entries", entries}};
}

std::string block_edges(const Graph& g, const Block& b) {
  std::string s;
  for (EdgeId e : b.edges) {
    const Edge& edge = g.edge(e);
    if (!s.empty()) s += ' ';
    s += g.label(edge.a) + "-" + g.label(edge.b);
  }
  return s;
}

std::string plural(std::size_t k, const std::string& word, const std::string& many) {
  return std::to_string(k) + " " + (k == 1 ? word : many);
}

int cmd_gen_grn(std::size_t n, std::size_t r, const std::string& out_path, const std::string& fix,
                std::ostream& out) {
  Graph g = fix.empty() ? build_grn({n, r}) : [&] {
    const auto& names = fixture_names();
    if (std::find(names.begin(), names.end(), fix) == names.end())
      throw UsageError("unknown fixture '" + fix + "'");
    return fixture(fix);
  }();
  if (out_path.empty()) {
    write_graph(out, g);
    return kExitOk;
  }
  std::ofstream f(out_path);
  if (!f) throw UsageError("cannot write '" + out_path + "'");
  write_graph(f, g);
  return kExitOk;
}

int cmd_blocks(const Graph& g, std::ostream& out) {
  BlockDecomposition d = block_decomposition(g);
  BlockTree t = block_tree(d);
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    out << "block " << i << " (" << to_string(d.blocks[i].kind) << "): " << block_edges(g, d.blocks[i]) << '\n';
  }
  out << "cut vertices:";
  for (VertexId v : d.cut_vertices) out << ' ' << g.label(v);
  out << '\n';
  out << "tree edges:";
  for (auto [b, v] : t.edges()) out << " B" << b << "-" << g.label(v);
  out << '\n';
  out << plural(d.blocks.size(), "block", "blocks") << ", "
      << plural(d.cut_vertices.size(), "cut vertex", "cut vertices") << ", max block distance "
      << max_block_distance(t) << '\n';
  return kExitOk;
}

int cmd_circuits(const Graph& g, bool max_only, bool cactus_fast, bool as_json, const Limits& lim,
                 std::ostream& out) {
  std::vector<CircuitSubgraph> cs;
  if (!(max_only && cactus_fast)) cs = enumerate_circuit_subgraphs(g, lim.max_cycles);
  Exponent t = 0;
  if (cactus_fast) {
    if (!is_odd_cactus(g)) throw InvalidArgument("--cactus-fast needs a connected graph whose blocks are odd cycles");
    t = max_circuit_degree_cactus(g);
  } else {
    for (const auto& c : cs) t = std::max(t, c.degree());
  }
  if (as_json) {
    json j;
    j["t"] = t;
    if (!max_only) {
      j["circuits"] = json::array();
      for (const auto& c : cs) {
        json e = binomial_json(circuit_binomial(c, g));
        e["kind"] = to_string(c.kind);
        j["circuits"].push_back(e);
      }
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  if (!max_only)
    for (const auto& c : cs) out << circuit_binomial(c, g).to_string() << '\n';
  out << "t = " << t << '\n';
  return kExitOk;
}

int cmd_graver(const GraphSource& src, const std::string& engine, const std::string& matrix, bool as_json,
               const Limits& lim, std::ostream& out) {
  std::vector<std::string> lines;
  json items = json::array();
  Exponent max_deg = 0;
  auto emit = [&](const Binomial& b, std::string_view var) {
    lines.push_back(b.to_string(var));
    items.push_back(binomial_json(b));
    items.back()["binomial"] = b.to_string(var);
    max_deg = std::max(max_deg, b.degree());
  };

  if (!matrix.empty()) {
    if (src.given()) throw UsageError("--matrix replaces the graph input");
    if (engine != "completion") throw UsageError("--matrix requires --engine completion");
    ToricConfiguration a = read_matrix_file(matrix);
    if (!a.is_nonnegative_pointed())
      throw InvalidArgument("matrix must have nonnegative entries and no zero column");
    for (const SignedVector& v : graver_completion(a, lim.max_insertions))
      emit(Binomial::from_exponents(v.entries), "x");
  } else {
    Graph g = src.load();
    if (engine == "graph") {
      for (const Binomial& b : graver_from_graph(g, lim.max_subgraphs)) emit(b, "e");
    } else {
      if (g.edge_count() == 0) throw InvalidArgument("graph has no edges");
      for (const SignedVector& v : graver_completion(incidence_configuration(g), lim.max_insertions))
        emit(Binomial::from_exponents(v.entries), "e");
    }
  }

  if (as_json) {
    out << json{{"elements", items}, {"size", items.size()}, {"max_degree", max_deg}}.dump(2) << '\n';
    return kExitOk;
  }
  for (const auto& l : lines) out << l << '\n';
  out << plural(lines.size(), "element", "elements") << ", max degree " << max_deg << '\n';
  return kExitOk;
}

int cmd_primitive(const Graph& g, std::ostream& out) {
  PrimitivityVerdict v = is_primitive_subgraph(g);
  out << v.describe(g) << '\n';
  if (v.primitive) out << subgraph_binomial(g).to_string() << '\n';
  return kExitOk;
}

int cmd_index(const Graph& g, std::size_t k, const Limits& lim, std::ostream& out) {
  auto cs = enumerate_circuit_subgraphs(g, lim.max_cycles);
  if (k >= cs.size())
    throw UsageError("--circuit " + std::to_string(k) + " out of range (" + std::to_string(cs.size()) +
                     " circuits)");
  Binomial b = circuit_binomial(cs[k], g);
  ToricConfiguration a = incidence_configuration(g);
  BigInt idx = circuit_index(b, a);
  out << "circuit: " << b.to_string() << '\n';
  out << "degree: " << b.degree() << '\n';
  out << "index: " << idx.get_str() << '\n';
  out << "true degree: " << true_degree(b, a).get_str() << '\n';
  return kExitOk;
}

int cmd_report(std::size_t n, std::size_t rmax, std::size_t verify, const std::string& format,
               const Limits& lim, std::ostream& out) {
  ReportOptions opts;
  opts.verify_up_to = verify;
  opts.limits = lim;
  SeparationReport rep = separation_report(n, rmax, opts);
  if (format == "csv") write_report_csv(out, rep);
  else write_report_table(out, rep);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"toric ideals of graphs: circuits, Graver bases, lattice indices", "toricgraph"};
  app.require_subcommand(1);

  std::size_t n = 3, r = 1, rmax = 6, verify = 2, circuit = 0;
  std::string out_path, gen_fixture, engine = "graph", matrix, format = "table";
  bool max_only = false, cactus_fast = false, as_json = false;
  GraphSource src;

  auto* gen = app.add_subcommand("gen-grn", "write G_r^n (or a bundled graph) as an edge list");
  gen->add_option("--n", n, "odd cycle length >= 3")->capture_default_str();
  gen->add_option("--r", r, "number of rounds")->capture_default_str();
  gen->add_option("--out", out_path, "output file (default stdout)");
  gen->add_option("--fixture", gen_fixture, "bundled graph instead of G_r^n");

  auto* blocks = app.add_subcommand("blocks", "blocks, cut vertices and block tree");
  src.attach(blocks);

  auto* circuits = app.add_subcommand("circuits", "circuits of the toric ideal and their largest degree t");
  src.attach(circuits);
  circuits->add_flag("--max-degree-only", max_only, "print only t");
  circuits->add_flag("--cactus-fast", cactus_fast, "compute t from the block tree (odd cacti only)");
  circuits->add_flag("--json", as_json, "machine-readable output");

  auto* graver = app.add_subcommand("graver", "Graver basis");
  src.attach(graver);
  graver->add_option("--engine", engine, "graph or completion")
      ->check(CLI::IsMember({"graph", "completion"}))
      ->capture_default_str();
  graver->add_option("--matrix", matrix, "matrix file: 'rows cols' then row-major integers");
  graver->add_flag("--json", as_json, "machine-readable output");

  auto* prim = app.add_subcommand("primitive-check", "is the whole graph a primitive walk's support");
  src.attach(prim);

  auto* index = app.add_subcommand("index", "degree, lattice index and true degree of one circuit");
  src.attach(index);
  index->add_option("--circuit", circuit, "position in the circuit listing (from 0)")->required();

  auto* report = app.add_subcommand("report", "Graver degree versus circuit bound on G_r^n");
  report->add_option("--n", n, "odd cycle length >= 3")->capture_default_str();
  report->add_option("--rmax", rmax, "largest r")->capture_default_str();
  report->add_option("--verify-up-to", verify, "full circuit enumeration for r up to this")
      ->capture_default_str();
  report->add_option("--format", format, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitUsage;
  }

  try {
    Limits lim = Limits::from_environment();
    if (*gen) return cmd_gen_grn(n, r, out_path, gen_fixture, out);
    if (*blocks) return cmd_blocks(src.load(), out);
    if (*circuits) return cmd_circuits(src.load(), max_only, cactus_fast, as_json, lim, out);
    if (*graver) return cmd_graver(src, engine, matrix, as_json, lim, out);
    if (*prim) return cmd_primitive(src.load(), out);
    if (*index) return cmd_index(src.load(), circuit, lim, out);
    if (*report) return cmd_report(n, rmax, verify, format, lim, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (raise it via " << Limits::kEnvVar << ")\n";
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace toric::cli
