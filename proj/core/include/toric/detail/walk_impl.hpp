#pragma once

#include <string>

#include "toric/error.hpp"

namespace toric {

template <typename G>
std::vector<VertexId> walk_vertices(const G& g, const ClosedWalk& w) {
  if (w.start >= g.vertex_count()) {
    throw InvalidArgument("walk start vertex out of range");
  }
  std::vector<VertexId> out;
  out.reserve(w.edges.size() + 1);
  VertexId at = w.start;
  out.push_back(at);
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    EdgeId e = w.edges[i];
    if (e >= g.edge_count()) {
      throw InvalidArgument("walk edge " + std::to_string(e) + " out of range");
    }
    const auto& ed = g.edge(e);
    if (ed.a != at && ed.b != at) {
      throw InvalidArgument("walk breaks at position " + std::to_string(i));
    }
    at = ed.other(at);
    out.push_back(at);
  }
  return out;
}

template <typename G>
bool is_closed_walk(const G& g, const ClosedWalk& w) {
  try {
    auto vs = walk_vertices(g, w);
    return vs.back() == w.start;
  } catch (const InvalidArgument&) {
    return false;
  }
}

}  // namespace toric
