#include "toric/circuits.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "toric/blocks.hpp"
#include "toric/error.hpp"

namespace toric {

namespace {

using Kind = CircuitSubgraph::Kind;

bool shares_edge(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return !common.empty();
}

std::vector<VertexId> common_vertices(const Graph& g, const EdgeSet& a, const EdgeSet& b) {
  auto va = vertices_of(g, a);
  auto vb = vertices_of(g, b);
  std::vector<VertexId> common;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
  return common;
}

bool is_cycle(const Graph& g, const EdgeSet& edges) {
  if (edges.size() < 3) return false;
  if (!std::is_sorted(edges.begin(), edges.end()) ||
      std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    return false;
  }
  for (EdgeId e : edges) {
    if (e >= g.edge_count()) return false;
  }
  auto vs = vertices_of(g, edges);
  if (vs.size() != edges.size()) return false;
  try {
    return cycle_walk(g, edges, vs.front()).size() == edges.size();
  } catch (const InvalidArgument&) {
    return false;
  }
}

}  // namespace

const char* to_string(Kind kind) {
  switch (kind) {
    case Kind::kEvenCycle:
      return "even-cycle";
    case Kind::kSharedVertex:
      return "two-odd-cycles-one-vertex";
    case Kind::kJoinedByPath:
      return "two-odd-cycles-path";
  }
  return "?";
}

std::pair<EdgeSet, Kind> CircuitSubgraph::signature() const {
  EdgeSet all = cycle1;
  all.insert(all.end(), cycle2.begin(), cycle2.end());
  all.insert(all.end(), path.edges.begin(), path.edges.end());
  std::sort(all.begin(), all.end());
  return {std::move(all), kind};
}

Exponent CircuitSubgraph::degree() const {
  if (kind == Kind::kEvenCycle) return static_cast<Exponent>(cycle1.size() / 2);
  return static_cast<Exponent>((cycle1.size() + cycle2.size()) / 2 + path.edges.size());
}

std::vector<EdgeId> cycle_walk(const Graph& g, const EdgeSet& cycle, VertexId from) {
  auto in_cycle = [&](EdgeId e) { return std::binary_search(cycle.begin(), cycle.end(), e); };
  std::vector<EdgeId> out;
  out.reserve(cycle.size());
  VertexId at = from;
  EdgeId came_by = g.edge_count();
  do {
    EdgeId next = g.edge_count();
    std::size_t options = 0;
    for (const Incidence& inc : g.incident(at)) {
      if (!in_cycle(inc.edge)) continue;
      ++options;
      if (inc.edge != came_by && next == g.edge_count()) next = inc.edge;
    }
    if (options != 2 || next == g.edge_count() || out.size() >= cycle.size()) {
      throw InvalidArgument("cycle_walk: edge set is not a cycle through the start vertex");
    }
    out.push_back(next);
    came_by = next;
    at = g.edge(next).other(at);
  } while (at != from);
  if (out.size() != cycle.size()) throw InvalidArgument("cycle_walk: edge set is not a single cycle");
  return out;
}

std::vector<CircuitSubgraph> enumerate_circuit_subgraphs(const Graph& g, std::size_t max_cycles) {
  const auto cycles = enumerate_cycles(g, Parity::kAll, max_cycles);
  std::vector<const EdgeSet*> odd;
  std::map<std::pair<EdgeSet, Kind>, CircuitSubgraph> unique;

  auto add = [&](CircuitSubgraph c) {
    auto sig = c.signature();
    unique.try_emplace(std::move(sig), std::move(c));
  };

  for (const EdgeSet& c : cycles) {
    if (c.size() % 2 == 0) {
      add({Kind::kEvenCycle, c, {}, {}});
    } else {
      odd.push_back(&c);
    }
  }
  for (std::size_t i = 0; i < odd.size(); ++i) {
    for (std::size_t j = i + 1; j < odd.size(); ++j) {
      const EdgeSet& c1 = *odd[i];
      const EdgeSet& c2 = *odd[j];
      if (shares_edge(c1, c2)) continue;
      auto common = common_vertices(g, c1, c2);
      if (common.size() == 1) {
        add({Kind::kSharedVertex, c1, c2, {common.front(), {}}});
      } else if (common.empty()) {
        for (Path& p : connecting_paths(g, c1, c2)) add({Kind::kJoinedByPath, c1, c2, std::move(p)});
      }
    }
  }

  std::vector<CircuitSubgraph> out;
  out.reserve(unique.size());
  for (auto& [sig, c] : unique) out.push_back(std::move(c));
  return out;
}

Binomial circuit_binomial(const CircuitSubgraph& c, const Graph& g) {
  ClosedWalk w;
  switch (c.kind) {
    case Kind::kEvenCycle: {
      if (!is_cycle(g, c.cycle1) || c.cycle1.size() % 2 != 0 || !c.cycle2.empty() ||
          !c.path.edges.empty()) {
        throw InvalidArgument("circuit_binomial: not an even cycle");
      }
      w.start = vertices_of(g, c.cycle1).front();
      w.edges = cycle_walk(g, c.cycle1, w.start);
      break;
    }
    case Kind::kSharedVertex: {
      if (!is_cycle(g, c.cycle1) || !is_cycle(g, c.cycle2) || c.cycle1.size() % 2 == 0 ||
          c.cycle2.size() % 2 == 0 || !c.path.edges.empty() || shares_edge(c.cycle1, c.cycle2)) {
        throw InvalidArgument("circuit_binomial: not two odd cycles");
      }
      auto common = common_vertices(g, c.cycle1, c.cycle2);
      if (common.size() != 1) throw InvalidArgument("circuit_binomial: cycles must meet in one vertex");
      w.start = common.front();
      w.edges = cycle_walk(g, c.cycle1, w.start);
      auto second = cycle_walk(g, c.cycle2, w.start);
      w.edges.insert(w.edges.end(), second.begin(), second.end());
      break;
    }
    case Kind::kJoinedByPath: {
      if (!is_cycle(g, c.cycle1) || !is_cycle(g, c.cycle2) || c.cycle1.size() % 2 == 0 ||
          c.cycle2.size() % 2 == 0 || c.path.edges.empty()) {
        throw InvalidArgument("circuit_binomial: not two odd cycles with a path");
      }
      if (!common_vertices(g, c.cycle1, c.cycle2).empty()) {
        throw InvalidArgument("circuit_binomial: cycles must be vertex-disjoint");
      }
      auto paths = connecting_paths(g, c.cycle1, c.cycle2);
      if (std::find(paths.begin(), paths.end(), c.path) == paths.end()) {
        throw InvalidArgument("circuit_binomial: path does not join the cycles");
      }
      w.start = c.path.start;
      w.edges = cycle_walk(g, c.cycle1, w.start);
      w.edges.insert(w.edges.end(), c.path.edges.begin(), c.path.edges.end());
      auto second = cycle_walk(g, c.cycle2, c.path.end(g));
      w.edges.insert(w.edges.end(), second.begin(), second.end());
      w.edges.insert(w.edges.end(), c.path.edges.rbegin(), c.path.edges.rend());
      break;
    }
  }
  return binomial_of_walk(w, g);
}

Exponent max_circuit_degree(const Graph& g, std::size_t max_cycles) {
  Exponent best = 0;
  for (const CircuitSubgraph& c : enumerate_circuit_subgraphs(g, max_cycles)) {
    best = std::max(best, circuit_binomial(c, g).degree());
  }
  return best;
}

bool is_odd_cactus(const Graph& g) {
  if (!g.is_connected()) return false;
  for (const Block& b : block_decomposition(g).blocks) {
    if (b.kind != BlockKind::kCycle || b.edges.size() % 2 == 0) return false;
  }
  return true;
}

CactusCircuitWitness cactus_circuit_witness(const Graph& g) {
  const BlockDecomposition d = block_decomposition(g);
  const std::size_t nb = d.blocks.size();

  // Position of each vertex along each cycle block it lies on.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> position(g.vertex_count());
  std::vector<std::vector<VertexId>> block_cuts(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    const Block& blk = d.blocks[b];
    if (blk.kind != BlockKind::kCycle || blk.edges.size() % 2 == 0) {
      throw InvalidArgument("max_circuit_degree_cactus: block " + std::to_string(b) +
                            " is not an odd cycle");
    }
    VertexId at = blk.vertices.front();
    auto order = cycle_walk(g, blk.edges, at);
    for (std::size_t i = 0; i < order.size(); ++i) {
      position[at].emplace_back(b, i);
      if (d.is_cut_vertex(at)) block_cuts[b].push_back(at);
      at = g.edge(order[i]).other(at);
    }
  }
  auto pos = [&](std::size_t b, VertexId v) {
    for (auto [blk, p] : position[v])
      if (blk == b) return p;
    throw ConsistencyError("vertex missing from its block");
  };
  auto longest_arc = [&](std::size_t b, VertexId x, VertexId y) {
    std::size_t px = pos(b, x), py = pos(b, y);
    std::size_t arc = px > py ? px - py : py - px;
    return std::max(arc, d.blocks[b].edges.size() - arc);
  };

  CactusCircuitWitness best;
  struct Visit {
    std::size_t block;
    VertexId entry;
    std::size_t length;
  };
  std::vector<Visit> stack;
  for (std::size_t s = 0; s < nb; ++s) {
    stack.clear();
    for (VertexId v : block_cuts[s])
      for (std::size_t b : d.blocks_at[v])
        if (b != s) stack.push_back({b, v, 0});
    while (!stack.empty()) {
      Visit at = stack.back();
      stack.pop_back();
      if (at.block > s) {
        Exponent deg = static_cast<Exponent>(
            (d.blocks[s].edges.size() + d.blocks[at.block].edges.size()) / 2 + at.length);
        if (deg > best.degree) best = {deg, s, at.block, at.length};
      }
      for (VertexId y : block_cuts[at.block]) {
        if (y == at.entry) continue;
        std::size_t through = at.length + longest_arc(at.block, at.entry, y);
        for (std::size_t b : d.blocks_at[y])
          if (b != at.block) stack.push_back({b, y, through});
      }
    }
  }
  return best;
}

}  // namespace toric
