#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toric/graph.hpp"
#include "toric/graver.hpp"
#include "toric/limits.hpp"
#include "toric/toric_model.hpp"

namespace toric {

// Outcome of the block-structure test for primitive walks, with the clause
// that decided it.
struct PrimitivityVerdict {
  enum class Reason {
    kEvenCycle,            // primitive: the subgraph is an even cycle
    kValidBlockStructure,  // primitive: every block and cut vertex passes
    kNoEdges,              // not primitive: nothing to walk on
    kBiconnected,          // not primitive: one block but not an even cycle
    kBadBlock,             // not primitive: a block neither a cycle nor a cut edge
    kCutVertexBlockCount,  // not primitive: a cut vertex in three or more blocks
    kEvenPart,             // not primitive: a side of a cut vertex has even cyclic edge total
  };

  bool primitive = false;
  Reason reason = Reason::kNoEdges;
  std::optional<std::size_t> block;
  std::optional<VertexId> cut_vertex;
  std::size_t blocks_at_vertex = 0;
  std::pair<std::size_t, std::size_t> part_cycle_edges{0, 0};

  std::string describe(const Graph& w) const;
};

const char* to_string(PrimitivityVerdict::Reason reason);

// Decides whether the connected graph w underlies a primitive walk. Throws
// InvalidArgument for disconnected input.
PrimitivityVerdict is_primitive_subgraph(const Graph& w);

// Binomial of a closed Eulerian trail of W' (cut edges doubled) for a
// connected subgraph w, in w's edge numbering.
Binomial subgraph_binomial(const Graph& w);

// Graver basis of the toric ideal of g from its primitive connected
// subgraphs, sorted and duplicate-free. Throws CapExceeded past
// max_subgraphs connected edge subsets.
std::vector<Binomial> graver_from_graph(const Graph& g,
                                        std::size_t max_subgraphs = Limits{}.max_subgraphs);

// Connected edge subsets of g, each sorted, in discovery order.
std::vector<EdgeSet> connected_edge_subsets(const Graph& g,
                                            std::size_t max_subgraphs = Limits{}.max_subgraphs);

GraverSet to_graver_set(std::span<const Binomial> binomials);

// Binomial of a closed Eulerian trail of G_r^n. Throws InvalidArgument for
// r == 0, where the trail is an odd cycle.
Binomial grn_primitive_binomial(std::size_t n, std::size_t r);

}  // namespace toric
