#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tanglekit/error.hpp"

namespace tanglekit {

using Vertex = int;

// Sorted, duplicate-free list of vertex ids. All set-valued results in the
// library use this canonical form so output is deterministic.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

VertexSet make_set(std::vector<Vertex> ids);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, Vertex v);
bool is_subset(const VertexSet& sub, const VertexSet& super);

class Graph {
 public:
  Graph() = default;

  // Throws LoopEdge / VertexOutOfRange. Parallel edges are merged.
  Graph(int vertex_count, std::span<const Edge> edges);
  Graph(int vertex_count, std::initializer_list<Edge> edges)
      : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  // Edges with u < v, sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const VertexSet& neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }
  bool adjacent(Vertex u, Vertex v) const;

  VertexSet all_vertices() const;
  std::vector<int> degree_sequence() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adjacency_;
  std::vector<Edge> edges_;
};

// A graph on local ids 0..k-1 together with the parent id of each local vertex.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  Vertex parent_of(Vertex local) const { return to_parent.at(static_cast<std::size_t>(local)); }
  VertexSet lift(const VertexSet& local) const;
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);
Subgraph delete_vertices(const Graph& g, const VertexSet& removed);

// Maximal connected vertex sets of g - removed, ordered by minimum vertex id.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed = {});
bool is_connected(const Graph& g);
bool induces_connected(const Graph& g, const VertexSet& vertices);

class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  bool empty() const noexcept { return vertices_.empty(); }
  std::size_t size() const noexcept { return vertices_.size(); }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  VertexSet vertex_set() const { return make_set(vertices_); }

  // Distinct vertices, consecutive ones adjacent in g.
  bool valid_in(const Graph& g) const;

  friend bool operator==(const Path&, const Path&) = default;

 private:
  std::vector<Vertex> vertices_;
};

// Maximum set of pairwise vertex-disjoint sources->sinks paths avoiding
// forbidden. Each path meets sources only in its first vertex and sinks only
// in its last one.
std::vector<Path> max_disjoint_paths(const Graph& g, const VertexSet& sources,
                                     const VertexSet& sinks, const VertexSet& forbidden = {});

inline constexpr int kDefaultBruteForceCap = 16;

// Exhaustive oracle for Menger: the least |X| such that g - X has no
// sources->sinks path.
int brute_min_separator(const Graph& g, const VertexSet& sources, const VertexSet& sinks,
                        int vertex_cap = kDefaultBruteForceCap);

// Vertex connectivity; n-1 for complete graphs.
int vertex_connectivity(const Graph& g);
int min_degree(const Graph& g);

}  // namespace tanglekit
