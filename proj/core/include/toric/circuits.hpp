#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "toric/graph.hpp"
#include "toric/limits.hpp"
#include "toric/toric_model.hpp"

namespace toric {

// Subgraph carrying a circuit of the toric ideal of a graph: an even cycle,
// two odd cycles meeting in one vertex, or two vertex-disjoint odd cycles
// joined by a path.
struct CircuitSubgraph {
  enum class Kind { kEvenCycle, kSharedVertex, kJoinedByPath };

  Kind kind = Kind::kEvenCycle;
  EdgeSet cycle1;
  EdgeSet cycle2;  // empty for kEvenCycle
  Path path;       // starts on cycle1; empty unless kJoinedByPath

  // Sorted edges of the whole subgraph followed by the kind. Two circuit
  // subgraphs are the same circuit exactly when their signatures agree.
  std::pair<EdgeSet, Kind> signature() const;

  // Degree of its binomial: |cycle|/2, or (|cycle1|+|cycle2|)/2 + |path|.
  Exponent degree() const;
};

const char* to_string(CircuitSubgraph::Kind kind);

// All circuit subgraphs of g, deduplicated and sorted by signature.
// Throws CapExceeded when cycle enumeration exceeds max_cycles.
std::vector<CircuitSubgraph> enumerate_circuit_subgraphs(const Graph& g,
                                                         std::size_t max_cycles = Limits{}.max_cycles);

// Binomial of the closed walk that goes once around cycle1, along the path,
// once around cycle2 and back along the path: alternating +-1 on the cycles
// and +-2 on the path. Throws InvalidArgument when c is not a circuit
// subgraph of g.
Binomial circuit_binomial(const CircuitSubgraph& c, const Graph& g);

// Edges of a cycle listed in traversal order from `from`, leaving `from` by
// its smaller-id cycle edge. Throws InvalidArgument when the edge set is not a
// single cycle through `from`.
std::vector<EdgeId> cycle_walk(const Graph& g, const EdgeSet& cycle, VertexId from);

// Largest circuit degree by full enumeration; 0 without circuits. Equals the
// largest true circuit degree because graph circuits have index 1.
Exponent max_circuit_degree(const Graph& g, std::size_t max_cycles = Limits{}.max_cycles);

struct CactusCircuitWitness {
  Exponent degree = 0;
  std::size_t block1 = 0;
  std::size_t block2 = 0;
  std::size_t path_length = 0;
};

// Largest circuit degree of a connected graph whose blocks are all odd
// cycles, from the block tree: for every block pair the longest connecting
// path takes the longer arc through each interior block. Also returns the
// first pair (in block-id order) attaining the maximum. Throws
// InvalidArgument if some block is not an odd cycle.
CactusCircuitWitness cactus_circuit_witness(const Graph& g);

inline Exponent max_circuit_degree_cactus(const Graph& g) { return cactus_circuit_witness(g).degree; }

// True when g is connected and every block is an odd cycle.
bool is_odd_cactus(const Graph& g);

}  // namespace toric
