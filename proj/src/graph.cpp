#include "tanglekit/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>

namespace tanglekit {

VertexSet make_set(std::vector<Vertex> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

bool is_subset(const VertexSet& sub, const VertexSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) {
  if (vertex_count < 0) {
    throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  }
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " with " +
                      std::to_string(vertex_count) + " vertices");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(e.u));
    }
    edges_.push_back(Edge{std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  return set_contains(neighbors(u), v);
}

VertexSet Graph::all_vertices() const {
  VertexSet all(adjacency_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Vertex>(i);
  return all;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> deg;
  deg.reserve(adjacency_.size());
  for (const auto& nbrs : adjacency_) deg.push_back(static_cast<int>(nbrs.size()));
  return deg;
}

VertexSet Subgraph::lift(const VertexSet& local) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(parent_of(v));
  return make_set(std::move(out));
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> to_local(static_cast<std::size_t>(g.vertex_count()), -1);
  Subgraph sub;
  for (Vertex v : keep) {
    if (!g.has_vertex(v)) {
      throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
    }
    to_local[static_cast<std::size_t>(v)] = static_cast<Vertex>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    Vertex a = to_local[static_cast<std::size_t>(e.u)];
    Vertex b = to_local[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back(Edge{a, b});
  }
  sub.graph = Graph(static_cast<int>(sub.to_parent.size()), edges);
  return sub;
}

Subgraph delete_vertices(const Graph& g, const VertexSet& removed) {
  return induced_subgraph(g, set_difference(g.all_vertices(), removed));
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<char> seen(n, 0);
  for (Vertex v : removed) {
    if (g.has_vertex(v)) seen[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<VertexSet> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    VertexSet comp;
    std::vector<Vertex> stack{static_cast<Vertex>(start)};
    seen[start] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool induces_connected(const Graph& g, const VertexSet& vertices) {
  if (vertices.empty()) return false;
  return components(g, set_difference(g.all_vertices(), vertices)).size() == 1;
}

bool Path::valid_in(const Graph& g) const {
  if (vertices_.empty()) return false;
  for (Vertex v : vertices_) {
    if (!g.has_vertex(v)) return false;
  }
  if (make_set(vertices_).size() != vertices_.size()) return false;
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (!g.adjacent(vertices_[i - 1], vertices_[i])) return false;
  }
  return true;
}

namespace {

// Unit-capacity flow network on the split-vertex digraph: vertex v becomes
// v_in = 2v and v_out = 2v + 1 joined by an arc of capacity 1.
class SplitFlow {
 public:
  explicit SplitFlow(int node_count) : head_(static_cast<std::size_t>(node_count), -1) {}

  void add_arc(int from, int to, int capacity) {
    arcs_.push_back(Arc{to, capacity, head_[static_cast<std::size_t>(from)]});
    head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back(Arc{from, 0, head_[static_cast<std::size_t>(to)]});
    head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
  }

  int max_flow(int source, int sink) {
    int flow = 0;
    while (augment(source, sink)) ++flow;
    return flow;
  }

  // Follows saturated forward arcs from `from`, consuming them.
  int take_flow_successor(int from) {
    for (int a = head_[static_cast<std::size_t>(from)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
      if ((a % 2) == 0 && arcs_[static_cast<std::size_t>(a) + 1].capacity > 0) {
        arcs_[static_cast<std::size_t>(a) + 1].capacity -= 1;
        return arcs_[static_cast<std::size_t>(a)].to;
      }
    }
    return -1;
  }

 private:
  struct Arc {
    int to;
    int capacity;
    int next;
  };

  bool augment(int source, int sink) {
    std::vector<int> via(head_.size(), -1);
    std::vector<char> seen(head_.size(), 0);
    std::queue<int> queue;
    queue.push(source);
    seen[static_cast<std::size_t>(source)] = 1;
    while (!queue.empty() && !seen[static_cast<std::size_t>(sink)]) {
      int x = queue.front();
      queue.pop();
      for (int a = head_[static_cast<std::size_t>(x)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
        const Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.capacity > 0 && !seen[static_cast<std::size_t>(arc.to)]) {
          seen[static_cast<std::size_t>(arc.to)] = 1;
          via[static_cast<std::size_t>(arc.to)] = a;
          queue.push(arc.to);
        }
      }
    }
    if (!seen[static_cast<std::size_t>(sink)]) return false;
    for (int x = sink; x != source;) {
      int a = via[static_cast<std::size_t>(x)];
      arcs_[static_cast<std::size_t>(a)].capacity -= 1;
      arcs_[static_cast<std::size_t>(a ^ 1)].capacity += 1;
      x = arcs_[static_cast<std::size_t>(a ^ 1)].to;
    }
    return true;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

void check_members(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (!g.has_vertex(v)) {
      throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
    }
  }
}

}  // namespace

std::vector<Path> max_disjoint_paths(const Graph& g, const VertexSet& sources, const VertexSet& sinks,
                                     const VertexSet& forbidden) {
  check_members(g, sources);
  check_members(g, sinks);
  check_members(g, forbidden);
  const int n = g.vertex_count();
  const int super_source = 2 * n;
  const int super_sink = 2 * n + 1;
  SplitFlow net(2 * n + 2);
  std::vector<char> blocked(static_cast<std::size_t>(n), 0);
  for (Vertex v : forbidden) blocked[static_cast<std::size_t>(v)] = 1;

  // Arc insertion order is fixed so that the decomposition is deterministic.
  for (Vertex v = 0; v < n; ++v) {
    if (!blocked[static_cast<std::size_t>(v)]) net.add_arc(2 * v, 2 * v + 1, 1);
  }
  for (const Edge& e : g.edges()) {
    if (blocked[static_cast<std::size_t>(e.u)] || blocked[static_cast<std::size_t>(e.v)]) continue;
    net.add_arc(2 * e.u + 1, 2 * e.v, 1);
    net.add_arc(2 * e.v + 1, 2 * e.u, 1);
  }
  for (Vertex v : sources) {
    if (!blocked[static_cast<std::size_t>(v)]) net.add_arc(super_source, 2 * v, 1);
  }
  for (Vertex v : sinks) {
    if (!blocked[static_cast<std::size_t>(v)]) net.add_arc(2 * v + 1, super_sink, 1);
  }

  const int flow = net.max_flow(super_source, super_sink);
  std::vector<Path> paths;
  for (int p = 0; p < flow; ++p) {
    std::vector<Vertex> walk;
    int node = net.take_flow_successor(super_source);
    while (node != super_sink && node >= 0) {
      // node is v_in; the next hop is v_out, then a neighbor's in-node or the sink.
      Vertex v = node / 2;
      walk.push_back(v);
      int out = net.take_flow_successor(node);
      node = net.take_flow_successor(out);
    }
    // Trim to a proper sources->sinks path: from the last source vertex to
    // the first sink vertex after it.
    std::size_t first = 0;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      if (set_contains(sources, walk[i])) first = i;
    }
    std::size_t last = first;
    while (!set_contains(sinks, walk[last])) ++last;
    paths.emplace_back(std::vector<Vertex>(walk.begin() + static_cast<std::ptrdiff_t>(first),
                                           walk.begin() + static_cast<std::ptrdiff_t>(last) + 1));
  }
  std::sort(paths.begin(), paths.end(),
            [](const Path& a, const Path& b) { return a.vertices() < b.vertices(); });
  return paths;
}

int brute_min_separator(const Graph& g, const VertexSet& sources, const VertexSet& sinks, int vertex_cap) {
  const int n = g.vertex_count();
  if (n > vertex_cap || n > 30) {
    throw Error(ErrorCode::InstanceTooLarge,
                std::to_string(n) + " vertices exceeds cap " + std::to_string(vertex_cap));
  }
  check_members(g, sources);
  check_members(g, sinks);
  std::uint32_t source_mask = 0;
  std::uint32_t sink_mask = 0;
  for (Vertex v : sources) source_mask |= 1u << v;
  for (Vertex v : sinks) sink_mask |= 1u << v;
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    nbr[static_cast<std::size_t>(e.u)] |= 1u << e.v;
    nbr[static_cast<std::size_t>(e.v)] |= 1u << e.u;
  }
  auto separates = [&](std::uint32_t removed) {
    std::uint32_t reached = source_mask & ~removed;
    std::uint32_t frontier = reached;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
        next |= nbr[static_cast<std::size_t>(std::countr_zero(f))];
      }
      next &= ~removed & ~reached;
      reached |= next;
      frontier = next;
    }
    return (reached & sink_mask) == 0;
  };
  const std::uint32_t limit = n == 0 ? 1u : (1u << n);
  int best = std::numeric_limits<int>::max();
  for (std::uint32_t removed = 0; removed < limit; ++removed) {
    int size = std::popcount(removed);
    if (size < best && separates(removed)) best = size;
  }
  return best;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  int best = std::max(n - 1, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      // Internally disjoint u-v paths correspond to disjoint N(u)-N(v) paths
      // in g - {u, v}.
      int local = 0;
      if (!g.neighbors(u).empty() && !g.neighbors(v).empty()) {
        local = static_cast<int>(max_disjoint_paths(g, g.neighbors(u), g.neighbors(v), VertexSet{u, v}).size());
      }
      best = std::min(best, local);
    }
  }
  return best;
}

int min_degree(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return g.vertex_count() == 0 ? 0 : best;
}

}  // namespace tanglekit
