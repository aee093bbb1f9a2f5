#include "toric/blocks.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "toric/error.hpp"

namespace toric {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

BlockKind classify(const Graph& g, const Block& b) {
  if (b.edges.size() == 1) return BlockKind::kCutEdge;
  // A block is biconnected, so connected; all degrees two makes it a cycle.
  if (b.edges.size() != b.vertices.size()) return BlockKind::kOther;
  for (VertexId v : b.vertices) {
    std::size_t d = 0;
    for (const Incidence& inc : g.incident(v)) {
      d += std::binary_search(b.edges.begin(), b.edges.end(), inc.edge) ? 1 : 0;
    }
    if (d != 2) return BlockKind::kOther;
  }
  return BlockKind::kCycle;
}

std::vector<std::size_t> bfs(const BlockTree& t, std::size_t from) {
  std::vector<std::size_t> dist(t.node_count(), kUnreached);
  std::queue<std::size_t> q;
  dist[from] = 0;
  q.push(from);
  while (!q.empty()) {
    std::size_t x = q.front();
    q.pop();
    for (std::size_t y : t.adjacency[x]) {
      if (dist[y] == kUnreached) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

// Tree path length 2k between blocks has k-1 interior blocks.
std::size_t interior_blocks(std::size_t tree_distance) {
  return tree_distance == 0 ? 0 : tree_distance / 2 - 1;
}

}  // namespace

const char* to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::kCycle:
      return "cycle";
    case BlockKind::kCutEdge:
      return "cut-edge";
    case BlockKind::kOther:
      return "other";
  }
  return "other";
}

BlockDecomposition block_decomposition(const Graph& g) {
  if (!g.is_connected()) throw InvalidArgument("block_decomposition: graph is not connected");
  BlockDecomposition d;
  d.blocks_at.resize(g.vertex_count());
  d.block_of_edge.assign(g.edge_count(), 0);
  for (EdgeSet& edges : biconnected_edge_partition(g)) {
    std::size_t id = d.blocks.size();
    Block b;
    b.vertices = vertices_of(g, edges);
    b.edges = std::move(edges);
    b.kind = classify(g, b);
    for (EdgeId e : b.edges) d.block_of_edge[e] = id;
    for (VertexId v : b.vertices) d.blocks_at[v].push_back(id);
    d.blocks.push_back(std::move(b));
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (d.blocks_at[v].size() >= 2) d.cut_vertices.push_back(v);
  }
  return d;
}

std::size_t BlockTree::edge_count() const {
  std::size_t twice = 0;
  for (const auto& adj : adjacency) twice += adj.size();
  return twice / 2;
}

std::vector<std::pair<std::size_t, VertexId>> BlockTree::edges() const {
  std::vector<std::pair<std::size_t, VertexId>> out;
  for (std::size_t b = 0; b < block_count; ++b) {
    for (std::size_t node : adjacency[b]) out.emplace_back(b, cut_vertices[node - block_count]);
  }
  return out;
}

BlockTree block_tree(const BlockDecomposition& d) {
  BlockTree t;
  t.block_count = d.blocks.size();
  t.cut_vertices = d.cut_vertices;
  t.adjacency.resize(t.block_count + t.cut_vertices.size());
  for (std::size_t i = 0; i < d.cut_vertices.size(); ++i) {
    std::size_t node = t.block_count + i;
    for (std::size_t b : d.blocks_at[d.cut_vertices[i]]) {
      t.adjacency[node].push_back(b);
      t.adjacency[b].push_back(node);
    }
  }
  for (auto& adj : t.adjacency) std::sort(adj.begin(), adj.end());
  return t;
}

std::size_t block_distance(const BlockTree& t, std::size_t b1, std::size_t b2) {
  if (b1 >= t.block_count || b2 >= t.block_count) {
    throw InvalidArgument("block_distance: unknown block id");
  }
  if (b1 == b2) return 0;
  auto dist = bfs(t, b1);
  if (dist[b2] == kUnreached) throw InvalidArgument("block_distance: blocks are not connected");
  return interior_blocks(dist[b2]);
}

BlockDistanceWitness farthest_blocks(const BlockTree& t) {
  if (t.block_count <= 1) return {};
  // Leaves of a block tree are blocks, so a diameter always ends in blocks.
  auto farthest_from = [&](std::size_t from) {
    auto dist = bfs(t, from);
    std::size_t best = from;
    for (std::size_t b = 0; b < t.block_count; ++b) {
      if (dist[b] != kUnreached && dist[b] > dist[best]) best = b;
    }
    return std::pair{best, dist[best]};
  };
  auto [a, ignored] = farthest_from(0);
  auto [b, length] = farthest_from(a);
  return {interior_blocks(length), std::min(a, b), std::max(a, b)};
}

}  // namespace toric
