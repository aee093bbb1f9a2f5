#include "toric/graph.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "toric/error.hpp"

namespace toric {

namespace {

constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

template <typename G>
bool connected_impl(const G& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incident(v)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = true;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return reached == n;
}

}  // namespace

// --- Graph ---------------------------------------------------------------

std::uint64_t Graph::pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

VertexId Graph::add_vertex(std::string label) {
  if (index_.contains(label)) {
    throw InvalidArgument("duplicate vertex label: " + label);
  }
  VertexId id = labels_.size();
  index_.emplace(label, id);
  labels_.push_back(std::move(label));
  adjacency_.emplace_back();
  return id;
}

EdgeId Graph::add_edge(VertexId a, VertexId b) {
  if (a >= labels_.size() || b >= labels_.size()) {
    throw InvalidArgument("edge endpoint out of range");
  }
  if (a == b) {
    throw InvalidArgument("loop at vertex " + labels_[a]);
  }
  auto key = pair_key(a, b);
  if (edge_index_.contains(key)) {
    throw InvalidArgument("parallel edge " + labels_[a] + " " + labels_[b]);
  }
  EdgeId id = edges_.size();
  edges_.push_back({a, b});
  edge_index_.emplace(key, id);
  adjacency_[a].push_back({id, b});
  adjacency_[b].push_back({id, a});
  return id;
}

EdgeId Graph::add_edge(std::string_view a, std::string_view b) {
  auto va = find_vertex(a);
  VertexId ia = va ? *va : add_vertex(std::string(a));
  auto vb = find_vertex(b);
  VertexId ib = vb ? *vb : add_vertex(std::string(b));
  return add_edge(ia, ib);
}

const std::string& Graph::label(VertexId v) const {
  if (v >= labels_.size()) throw InvalidArgument("vertex id out of range");
  return labels_[v];
}

std::optional<VertexId> Graph::find_vertex(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::vertex(std::string_view label) const {
  auto v = find_vertex(label);
  if (!v) throw InvalidArgument("unknown vertex: " + std::string(label));
  return *v;
}

const Edge& Graph::edge(EdgeId e) const {
  if (e >= edges_.size()) throw InvalidArgument("edge id out of range");
  return edges_[e];
}

std::optional<EdgeId> Graph::edge_between(VertexId a, VertexId b) const {
  auto it = edge_index_.find(pair_key(a, b));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::span<const Incidence> Graph::incident(VertexId v) const {
  if (v >= adjacency_.size()) throw InvalidArgument("vertex id out of range");
  return adjacency_[v];
}

bool Graph::is_connected() const { return connected_impl(*this); }

bool Graph::operator==(const Graph& other) const {
  if (labels_ != other.labels_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].a != other.edges_[i].a || edges_[i].b != other.edges_[i].b) return false;
  }
  return true;
}

Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges) {
  EdgeSet sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Subgraph out;
  out.vertex_origin = vertices_of(g, sorted);
  std::vector<VertexId> local(g.vertex_count(), 0);
  for (std::size_t i = 0; i < out.vertex_origin.size(); ++i) {
    local[out.vertex_origin[i]] = i;
    out.graph.add_vertex(g.label(out.vertex_origin[i]));
  }
  for (EdgeId e : sorted) {
    const Edge& ed = g.edge(e);
    out.graph.add_edge(local[ed.a], local[ed.b]);
    out.edge_origin.push_back(e);
  }
  return out;
}

// --- MultiGraph ----------------------------------------------------------

MultiGraph MultiGraph::from_graph(const Graph& g, std::span<const EdgeId> doubled) {
  std::vector<bool> twice(g.edge_count(), false);
  for (EdgeId e : doubled) {
    if (e >= g.edge_count()) throw InvalidArgument("doubled edge id out of range");
    twice[e] = true;
  }

  MultiGraph m;
  m.labels_.assign(g.labels().begin(), g.labels().end());
  m.adjacency_.resize(g.vertex_count());
  m.multiplicity_.assign(g.edge_count(), 0);
  auto push = [&m](const Edge& ed, EdgeId origin) {
    EdgeId id = m.edges_.size();
    m.edges_.push_back({ed.a, ed.b, origin});
    m.adjacency_[ed.a].push_back({id, ed.b});
    m.adjacency_[ed.b].push_back({id, ed.a});
    ++m.multiplicity_[origin];
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    push(g.edge(e), e);
    if (twice[e]) push(g.edge(e), e);
  }
  return m;
}

std::size_t MultiGraph::multiplicity(EdgeId origin) const { return multiplicity_.at(origin); }

bool MultiGraph::is_connected() const { return connected_impl(*this); }

ClosedWalk MultiGraph::origin_walk(const ClosedWalk& w) const {
  ClosedWalk out{w.start, {}};
  out.edges.reserve(w.edges.size());
  for (EdgeId e : w.edges) out.edges.push_back(edges_.at(e).origin);
  return out;
}

// --- constructions -------------------------------------------------------

Graph graph_sum(const Graph& g1, const Graph& g2, VertexId v, VertexId u,
                std::string_view prefix) {
  if (v >= g1.vertex_count()) throw InvalidArgument("graph_sum: vertex of g1 out of range");
  if (u >= g2.vertex_count()) throw InvalidArgument("graph_sum: vertex of g2 out of range");

  Graph out;
  for (const std::string& l : g1.labels()) out.add_vertex(l);
  std::vector<VertexId> map2(g2.vertex_count());
  for (VertexId x = 0; x < g2.vertex_count(); ++x) {
    if (x == u) {
      map2[x] = v;
      continue;
    }
    std::string l = std::string(prefix) + g2.label(x);
    if (out.find_vertex(l)) {
      throw InvalidArgument("graph_sum: label clash on " + l);
    }
    map2[x] = out.add_vertex(std::move(l));
  }
  for (const Edge& e : g1.edges()) out.add_edge(e.a, e.b);
  for (const Edge& e : g2.edges()) out.add_edge(map2[e.a], map2[e.b]);
  return out;
}

Graph cycle_graph(std::size_t length, std::string_view prefix) {
  if (length < 3) throw InvalidArgument("cycle length must be at least 3");
  Graph g;
  for (std::size_t i = 0; i < length; ++i) g.add_vertex(std::string(prefix) + std::to_string(i));
  for (std::size_t i = 0; i + 1 < length; ++i) g.add_edge(i, i + 1);
  g.add_edge(length - 1, 0);
  return g;
}

Graph add_cycle(const Graph& g, VertexId v, std::size_t length, std::optional<std::size_t> step) {
  if (length < 3 || length % 2 == 0) {
    throw InvalidArgument("add_cycle: length must be odd and at least 3, got " +
                          std::to_string(length));
  }
  const std::string& base = g.label(v);
  std::size_t s = 1;
  if (step) {
    s = *step;
  } else {
    while (g.find_vertex(base + "/" + std::to_string(s) + ".1")) ++s;
  }
  std::string prefix = base + "/" + std::to_string(s) + ".";
  return graph_sum(g, cycle_graph(length, ""), v, 0, prefix);
}

// --- enumeration ---------------------------------------------------------

std::vector<EdgeSet> biconnected_edge_partition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> disc(n, kUnset), low(n, 0), next(n, 0);
  struct Frame {
    VertexId v;
    EdgeId parent_edge;
  };
  std::vector<Frame> frames;
  std::vector<EdgeId> edge_stack;
  std::vector<EdgeSet> parts;
  std::size_t timer = 0;

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != kUnset) continue;
    disc[root] = low[root] = timer++;
    frames.push_back({root, kNoEdge});
    while (!frames.empty()) {
      Frame& f = frames.back();
      VertexId v = f.v;
      auto inc = g.incident(v);
      if (next[v] < inc.size()) {
        const Incidence& i = inc[next[v]++];
        if (i.edge == f.parent_edge) continue;
        VertexId w = i.neighbor;
        if (disc[w] == kUnset) {
          edge_stack.push_back(i.edge);
          disc[w] = low[w] = timer++;
          frames.push_back({w, i.edge});
        } else if (disc[w] < disc[v]) {
          edge_stack.push_back(i.edge);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      EdgeId parent_edge = f.parent_edge;
      frames.pop_back();
      if (frames.empty()) break;
      VertexId p = frames.back().v;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        EdgeSet part;
        while (true) {
          EdgeId e = edge_stack.back();
          edge_stack.pop_back();
          part.push_back(e);
          if (e == parent_edge) break;
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
      }
    }
  }
  std::sort(parts.begin(), parts.end(),
            [](const EdgeSet& x, const EdgeSet& y) { return x.front() < y.front(); });
  return parts;
}

std::vector<VertexId> vertices_of(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<VertexId> vs;
  vs.reserve(edges.size() * 2);
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    vs.push_back(ed.a);
    vs.push_back(ed.b);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<EdgeSet> enumerate_cycles(const Graph& g, Parity parity, std::size_t max_cycles) {
  std::vector<EdgeSet> found;
  std::size_t total = 0;

  // Every cycle lies inside one biconnected component.
  std::vector<bool> in_block(g.edge_count(), false);
  std::vector<bool> on_path(g.vertex_count(), false);
  std::vector<VertexId> path_vertices;
  std::vector<EdgeId> path_edges;

  for (const EdgeSet& block : biconnected_edge_partition(g)) {
    if (block.size() < 3) continue;
    for (EdgeId e : block) in_block[e] = true;
    const std::vector<VertexId> block_vertices = vertices_of(g, block);

    for (VertexId s : block_vertices) {
      // Cycles whose smallest vertex is s; each is met once per direction and
      // kept when its second vertex is smaller than its last.
      auto dfs = [&](auto&& self, VertexId v) -> void {
        for (const Incidence& inc : g.incident(v)) {
          if (!in_block[inc.edge]) continue;
          VertexId w = inc.neighbor;
          if (w == s) {
            if (path_edges.size() >= 2 && path_vertices[1] < v) {
              if (++total > max_cycles) throw CapExceeded("simple cycles", max_cycles);
              std::size_t len = path_edges.size() + 1;
              bool keep = parity == Parity::kAll || (parity == Parity::kEven) == (len % 2 == 0);
              if (keep) {
                EdgeSet cyc(path_edges);
                cyc.push_back(inc.edge);
                std::sort(cyc.begin(), cyc.end());
                found.push_back(std::move(cyc));
              }
            }
            continue;
          }
          if (w < s || on_path[w]) continue;
          on_path[w] = true;
          path_vertices.push_back(w);
          path_edges.push_back(inc.edge);
          self(self, w);
          path_edges.pop_back();
          path_vertices.pop_back();
          on_path[w] = false;
        }
      };
      on_path[s] = true;
      path_vertices.assign(1, s);
      path_edges.clear();
      dfs(dfs, s);
      on_path[s] = false;
    }
    for (EdgeId e : block) in_block[e] = false;
  }
  std::sort(found.begin(), found.end());
  return found;
}

VertexId Path::end(const Graph& g) const {
  VertexId at = start;
  for (EdgeId e : edges) at = g.edge(e).other(at);
  return at;
}

std::vector<Path> connecting_paths(const Graph& g, std::span<const EdgeId> c1,
                                   std::span<const EdgeId> c2) {
  enum Mark : unsigned char { kFree, kFirst, kSecond };
  std::vector<unsigned char> mark(g.vertex_count(), kFree);
  for (VertexId v : vertices_of(g, c1)) mark[v] = kFirst;
  for (VertexId v : vertices_of(g, c2)) {
    if (mark[v] == kFirst) {
      throw InvalidArgument("connecting_paths: cycles share vertex " + g.label(v));
    }
    mark[v] = kSecond;
  }

  std::vector<Path> out;
  std::vector<bool> visited(g.vertex_count(), false);
  std::vector<EdgeId> edges;
  for (VertexId s : vertices_of(g, c1)) {
    auto dfs = [&](auto&& self, VertexId v) -> void {
      for (const Incidence& inc : g.incident(v)) {
        VertexId w = inc.neighbor;
        if (mark[w] == kFirst || visited[w]) continue;
        edges.push_back(inc.edge);
        if (mark[w] == kSecond) {
          out.push_back({s, edges});
        } else {
          visited[w] = true;
          self(self, w);
          visited[w] = false;
        }
        edges.pop_back();
      }
    };
    dfs(dfs, s);
  }
  std::sort(out.begin(), out.end(), [](const Path& x, const Path& y) {
    return std::tie(x.edges, x.start) < std::tie(y.edges, y.start);
  });
  return out;
}

ClosedWalk eulerian_trail(const MultiGraph& m) {
  if (m.vertex_count() == 0) throw InvalidArgument("eulerian_trail: empty graph");
  if (!m.is_connected()) throw InvalidArgument("eulerian_trail: graph is not connected");
  VertexId start = m.vertex_count();
  for (VertexId v = 0; v < m.vertex_count(); ++v) {
    if (m.degree(v) % 2 != 0) {
      throw InvalidArgument("eulerian_trail: vertex " + m.label(v) + " has odd degree");
    }
    if (start == m.vertex_count() && m.degree(v) > 0) start = v;
  }
  if (start == m.vertex_count()) return ClosedWalk{0, {}};

  std::vector<bool> used(m.edge_count(), false);
  std::vector<std::size_t> next(m.vertex_count(), 0);
  std::vector<std::pair<VertexId, EdgeId>> stack{{start, kNoEdge}};
  std::vector<EdgeId> circuit;
  circuit.reserve(m.edge_count());
  while (!stack.empty()) {
    auto [v, via] = stack.back();
    auto inc = m.incident(v);
    while (next[v] < inc.size() && used[inc[next[v]].edge]) ++next[v];
    if (next[v] < inc.size()) {
      const Incidence& i = inc[next[v]++];
      used[i.edge] = true;
      stack.emplace_back(i.neighbor, i.edge);
    } else {
      stack.pop_back();
      if (via != kNoEdge) circuit.push_back(via);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return ClosedWalk{start, std::move(circuit)};
}

}  // namespace toric
