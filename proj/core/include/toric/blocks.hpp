#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "toric/graph.hpp"

namespace toric {

enum class BlockKind { kCycle, kCutEdge, kOther };

const char* to_string(BlockKind kind);

struct Block {
  EdgeSet edges;
  std::vector<VertexId> vertices;
  BlockKind kind = BlockKind::kOther;
};

// Maximal biconnected subgraphs of a connected graph. Block ids follow the
// smallest contained edge id, so block 0 holds edge 0.
struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<VertexId> cut_vertices;  // sorted
  std::vector<std::vector<std::size_t>> blocks_at;  // per vertex, sorted block ids
  std::vector<std::size_t> block_of_edge;

  bool is_cut_vertex(VertexId v) const { return blocks_at.at(v).size() >= 2; }
};

// Throws InvalidArgument for disconnected graphs.
BlockDecomposition block_decomposition(const Graph& g);

// Bipartite block/cut-vertex tree. Nodes [0, block_count) are blocks, the
// rest are the cut vertices in the order of BlockDecomposition::cut_vertices.
struct BlockTree {
  std::size_t block_count = 0;
  std::vector<VertexId> cut_vertices;
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t node_count() const { return adjacency.size(); }
  bool is_block(std::size_t node) const { return node < block_count; }
  std::size_t edge_count() const;
  // (block, cut vertex) pairs in node order.
  std::vector<std::pair<std::size_t, VertexId>> edges() const;
};

BlockTree block_tree(const BlockDecomposition& d);

// Number of block nodes strictly inside the tree path between two blocks.
// Throws InvalidArgument on an unknown block id.
std::size_t block_distance(const BlockTree& t, std::size_t b1, std::size_t b2);

struct BlockDistanceWitness {
  std::size_t distance = 0;
  std::size_t first = 0;
  std::size_t second = 0;
};

// Largest block distance with one pair attaining it, by a double sweep.
BlockDistanceWitness farthest_blocks(const BlockTree& t);

inline std::size_t max_block_distance(const BlockTree& t) { return farthest_blocks(t).distance; }

}  // namespace toric
