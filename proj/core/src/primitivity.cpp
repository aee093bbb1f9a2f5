#include "toric/primitivity.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "toric/blocks.hpp"
#include "toric/error.hpp"
#include "toric/grn.hpp"

namespace toric {

namespace {

using Reason = PrimitivityVerdict::Reason;

bool is_even_cycle(const Graph& w) {
  if (w.edge_count() < 4 || w.edge_count() % 2 != 0) return false;
  if (w.edge_count() != w.vertex_count()) return false;
  for (VertexId v = 0; v < w.vertex_count(); ++v) {
    if (w.degree(v) != 2) return false;
  }
  return w.is_connected();
}

}  // namespace

const char* to_string(Reason reason) {
  switch (reason) {
    case Reason::kEvenCycle:
      return "even cycle";
    case Reason::kValidBlockStructure:
      return "valid block structure";
    case Reason::kNoEdges:
      return "no edges";
    case Reason::kBiconnected:
      return "biconnected but not an even cycle";
    case Reason::kBadBlock:
      return "block is neither a cycle nor a cut edge";
    case Reason::kCutVertexBlockCount:
      return "cut vertex does not lie in exactly two blocks";
    case Reason::kEvenPart:
      return "cut vertex side with even cyclic edge total";
  }
  return "?";
}

std::string PrimitivityVerdict::describe(const Graph& w) const {
  std::ostringstream out;
  out << (primitive ? "primitive" : "not primitive") << ": " << to_string(reason);
  if (block) out << "; block " << *block;
  if (cut_vertex) {
    out << "; cut vertex " << w.label(*cut_vertex);
    if (reason == Reason::kCutVertexBlockCount) out << " in " << blocks_at_vertex << " blocks";
    if (reason == Reason::kEvenPart) {
      out << " splits cyclic edges " << part_cycle_edges.first << " | " << part_cycle_edges.second;
    }
  }
  return out.str();
}

PrimitivityVerdict is_primitive_subgraph(const Graph& w) {
  if (!w.is_connected()) throw InvalidArgument("is_primitive_subgraph: subgraph is not connected");
  PrimitivityVerdict v;
  if (w.edge_count() == 0) {
    v.reason = Reason::kNoEdges;
    return v;
  }
  if (is_even_cycle(w)) {
    v.primitive = true;
    v.reason = Reason::kEvenCycle;
    return v;
  }

  const BlockDecomposition d = block_decomposition(w);
  if (d.blocks.size() == 1) {
    v.reason = Reason::kBiconnected;
    v.block = 0;
    return v;
  }
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    if (d.blocks[b].kind == BlockKind::kOther) {
      v.reason = Reason::kBadBlock;
      v.block = b;
      return v;
    }
  }
  for (VertexId c : d.cut_vertices) {
    if (d.blocks_at[c].size() != 2) {
      v.reason = Reason::kCutVertexBlockCount;
      v.cut_vertex = c;
      v.blocks_at_vertex = d.blocks_at[c].size();
      return v;
    }
  }

  // Root the block tree at block 0 and total the cyclic edges per subtree;
  // the two sides of a cut vertex are its child block's subtree and the rest.
  const BlockTree t = block_tree(d);
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(t.node_count(), kNone), order;
  order.reserve(t.node_count());
  parent[0] = 0;
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t y : t.adjacency[order[i]]) {
      if (parent[y] == kNone) {
        parent[y] = order[i];
        order.push_back(y);
      }
    }
  }
  std::vector<std::size_t> subtree(t.node_count(), 0);
  for (std::size_t b = 0; b < t.block_count; ++b) {
    if (d.blocks[b].kind == BlockKind::kCycle) subtree[b] = d.blocks[b].edges.size();
  }
  for (std::size_t i = order.size(); i-- > 1;) subtree[parent[order[i]]] += subtree[order[i]];
  const std::size_t total = subtree[0];

  for (std::size_t k = 0; k < t.cut_vertices.size(); ++k) {
    std::size_t node = t.block_count + k;
    std::size_t child = kNone;
    for (std::size_t y : t.adjacency[node])
      if (y != parent[node]) child = y;
    std::size_t below = subtree[child];
    std::size_t rest = total - below;
    if (below % 2 == 0 || rest % 2 == 0) {
      v.reason = Reason::kEvenPart;
      v.cut_vertex = t.cut_vertices[k];
      v.part_cycle_edges = {rest, below};
      return v;
    }
  }
  v.primitive = true;
  v.reason = Reason::kValidBlockStructure;
  return v;
}

Binomial subgraph_binomial(const Graph& w) {
  MultiGraph m = doubled_graph(w);
  return binomial_of_walk(m.origin_walk(eulerian_trail(m)), w);
}

std::vector<EdgeSet> connected_edge_subsets(const Graph& g, std::size_t max_subgraphs) {
  const std::size_t m = g.edge_count();
  // Line-graph adjacency: edges sharing an endpoint.
  std::vector<std::vector<EdgeId>> touching(m);
  for (EdgeId e = 0; e < m; ++e) {
    for (VertexId x : {g.edge(e).a, g.edge(e).b})
      for (const Incidence& inc : g.incident(x))
        if (inc.edge != e) touching[e].push_back(inc.edge);
  }

  std::vector<EdgeSet> out;
  std::vector<EdgeId> current;
  std::vector<std::size_t> covered(m, 0);  // how many chosen edges have e in their closed neighbourhood
  auto cover = [&](EdgeId e) {
    ++covered[e];
    for (EdgeId f : touching[e]) ++covered[f];
  };
  auto uncover = [&](EdgeId e) {
    --covered[e];
    for (EdgeId f : touching[e]) --covered[f];
  };

  // Connected-subgraph enumeration with exclusive extension sets: each
  // connected subset is produced once, from its smallest edge.
  for (EdgeId root = 0; root < m; ++root) {
    auto extend = [&](auto&& self, std::vector<EdgeId> extension) -> void {
      if (out.size() >= max_subgraphs) throw CapExceeded("connected subgraphs", max_subgraphs);
      EdgeSet s = current;
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
      while (!extension.empty()) {
        EdgeId w = extension.back();
        extension.pop_back();
        std::vector<EdgeId> next = extension;
        for (EdgeId f : touching[w]) {
          if (f > root && covered[f] == 0 &&
              std::find(next.begin(), next.end(), f) == next.end()) {
            next.push_back(f);
          }
        }
        current.push_back(w);
        cover(w);
        self(self, std::move(next));
        uncover(w);
        current.pop_back();
      }
    };
    current.assign(1, root);
    cover(root);
    std::vector<EdgeId> ext;
    for (EdgeId f : touching[root])
      if (f > root && std::find(ext.begin(), ext.end(), f) == ext.end()) ext.push_back(f);
    extend(extend, std::move(ext));
    uncover(root);
  }
  return out;
}

std::vector<Binomial> graver_from_graph(const Graph& g, std::size_t max_subgraphs) {
  std::vector<Binomial> out;
  for (const EdgeSet& edges : connected_edge_subsets(g, max_subgraphs)) {
    Subgraph sub = edge_subgraph(g, edges);
    if (!is_primitive_subgraph(sub.graph).primitive) continue;
    Binomial local = subgraph_binomial(sub.graph);
    std::vector<Exponent> exps(g.edge_count(), 0);
    for (std::size_t i = 0; i < local.size(); ++i) exps[sub.edge_origin[i]] = local[i];
    out.push_back(Binomial::from_exponents(std::move(exps)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GraverSet to_graver_set(std::span<const Binomial> binomials) {
  std::vector<SignedVector> v;
  v.reserve(binomials.size());
  for (const Binomial& b : binomials) v.push_back({{b.exponents().begin(), b.exponents().end()}});
  return GraverSet(std::move(v));
}

Binomial grn_primitive_binomial(std::size_t n, std::size_t r) {
  if (r == 0) throw InvalidArgument("grn_primitive_binomial: G_0^n is an odd cycle with no binomial");
  Graph g = build_grn({n, r});
  return binomial_of_walk(eulerian_trail(MultiGraph::from_graph(g)), g);
}

}  // namespace toric
