#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "toric/limits.hpp"

namespace toric {

using VertexId = std::size_t;
using EdgeId = std::size_t;

// Sorted, duplicate-free list of edge ids. The canonical form of a cycle or
// subgraph throughout the library.
using EdgeSet = std::vector<EdgeId>;

struct Edge {
  VertexId a;
  VertexId b;

  VertexId other(VertexId v) const { return v == a ? b : a; }
  bool touches(VertexId v) const { return v == a || v == b; }
};

struct Incidence {
  EdgeId edge;
  VertexId neighbor;
};

// Finite simple graph with stable vertex and edge numbering. Edge order is the
// column order of the toric configuration built from the graph.
class Graph {
 public:
  Graph() = default;

  // Throws InvalidArgument on a duplicate label.
  VertexId add_vertex(std::string label);

  // Throws InvalidArgument on loops, parallel edges or unknown vertices.
  EdgeId add_edge(VertexId a, VertexId b);

  // Creates missing endpoints in first-appearance order.
  EdgeId add_edge(std::string_view a, std::string_view b);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& label(VertexId v) const;
  std::span<const std::string> labels() const { return labels_; }
  std::optional<VertexId> find_vertex(std::string_view label) const;
  VertexId vertex(std::string_view label) const;

  const Edge& edge(EdgeId e) const;
  std::span<const Edge> edges() const { return edges_; }
  std::optional<EdgeId> edge_between(VertexId a, VertexId b) const;

  // Incident edges of v in increasing edge-id order.
  std::span<const Incidence> incident(VertexId v) const;
  std::size_t degree(VertexId v) const { return incident(v).size(); }

  // Graphs with at most one vertex count as connected.
  bool is_connected() const;

  bool operator==(const Graph& other) const;

 private:
  static std::uint64_t pair_key(VertexId a, VertexId b);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::unordered_map<std::uint64_t, EdgeId> edge_index_;
};

// Edge-induced subgraph together with the maps back into the parent graph.
// Vertices and edges keep their relative parent order.
struct Subgraph {
  Graph graph;
  std::vector<VertexId> vertex_origin;
  std::vector<EdgeId> edge_origin;
};

Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges);

// Closed walk given by a start vertex and its edge sequence; the vertex
// sequence is implied.
struct ClosedWalk {
  VertexId start = 0;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  bool operator==(const ClosedWalk&) const = default;
};

// Vertex sequence v0, v1, ..., vk of a walk (vk == v0 when closed). Throws
// InvalidArgument when consecutive edges do not share the implied vertex.
// Works for Graph and MultiGraph.
template <typename G>
std::vector<VertexId> walk_vertices(const G& g, const ClosedWalk& w);

// True when the walk is consistent in g and returns to its start.
template <typename G>
bool is_closed_walk(const G& g, const ClosedWalk& w);

struct MultiEdge {
  VertexId a;
  VertexId b;
  EdgeId origin;  // simple edge this copy stems from

  VertexId other(VertexId v) const { return v == a ? b : a; }
};

// Multigraph arising from a simple graph by doubling selected edges. Only the
// edges passed as doubled have multiplicity two.
class MultiGraph {
 public:
  // Copies g, emitting the two copies of a doubled edge consecutively.
  static MultiGraph from_graph(const Graph& g, std::span<const EdgeId> doubled = {});

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& label(VertexId v) const { return labels_.at(v); }
  const MultiEdge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const MultiEdge> edges() const { return edges_; }
  std::span<const Incidence> incident(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  std::size_t multiplicity(EdgeId origin) const;
  bool is_connected() const;

  // Rewrites a walk over multigraph edge ids into one over simple edge ids.
  ClosedWalk origin_walk(const ClosedWalk& w) const;

 private:
  MultiGraph() = default;

  std::vector<std::string> labels_;
  std::vector<MultiEdge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<std::size_t> multiplicity_;
};

// Union of g1 and g2 with v (in g1) and u (in g2) merged into one vertex that
// keeps g1's label. Every other label of g2 receives `prefix`; a label clash
// after prefixing raises InvalidArgument. Edges of g1 come first.
Graph graph_sum(const Graph& g1, const Graph& g2, VertexId v, VertexId u,
                std::string_view prefix = {});

// Attaches a fresh cycle of odd length `length` >= 3 at v. The new vertices
// are labelled "<label(v)>/<step>.1" ... "<label(v)>/<step>.<length-1>" where
// step defaults to the smallest positive integer whose labels are unused.
Graph add_cycle(const Graph& g, VertexId v, std::size_t length,
                std::optional<std::size_t> step = std::nullopt);

// Cycle graph with vertices "<prefix>0" ... "<prefix>(length-1)".
Graph cycle_graph(std::size_t length, std::string_view prefix = "c");

// Edge sets of the biconnected components (blocks), ordered by smallest edge
// id. Isolated vertices contribute nothing.
std::vector<EdgeSet> biconnected_edge_partition(const Graph& g);

enum class Parity { kEven, kOdd, kAll };

// All simple cycles matching the parity filter, as canonical edge sets in
// lexicographic order. Throws CapExceeded past max_cycles.
std::vector<EdgeSet> enumerate_cycles(const Graph& g, Parity parity,
                                      std::size_t max_cycles = Limits{}.max_cycles);

// Simple path listed from its endpoint on the first cycle.
struct Path {
  VertexId start = 0;
  std::vector<EdgeId> edges;

  VertexId end(const Graph& g) const;
  bool operator==(const Path&) const = default;
};

// Vertex set touched by an edge set, sorted.
std::vector<VertexId> vertices_of(const Graph& g, std::span<const EdgeId> edges);

// Every simple path from a vertex of c1 to a vertex of c2 whose internal
// vertices avoid both cycles. Sorted by edge-id sequence. Throws
// InvalidArgument if the cycles share a vertex.
std::vector<Path> connecting_paths(const Graph& g, std::span<const EdgeId> c1,
                                   std::span<const EdgeId> c2);

// Closed trail through every edge exactly once, built Hierholzer-style from
// the smallest-id vertex of positive degree, always leaving a vertex by its
// unused incident edge of smallest id. Edge ids refer to the multigraph.
// Throws InvalidArgument for disconnected input or odd-degree vertices.
ClosedWalk eulerian_trail(const MultiGraph& m);

}  // namespace toric

#include "toric/detail/walk_impl.hpp"
