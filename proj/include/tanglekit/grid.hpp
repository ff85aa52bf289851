#pragma once

#include <utility>

#include "tanglekit/graph.hpp"

namespace tanglekit {

struct GridCoord {
  int row;     // 1-based
  int column;  // 1-based
  friend auto operator<=>(const GridCoord&, const GridCoord&) = default;
};

// The r x r grid. Vertex (i, j) has id (i-1)*r + (j-1); (i, j) and (i', j')
// are adjacent iff |i-i'| + |j-j'| = 1.
class GridGraph {
 public:
  explicit GridGraph(int r);

  int r() const noexcept { return r_; }
  const Graph& graph() const noexcept { return graph_; }

  Vertex id(int row, int column) const;
  Vertex id(GridCoord c) const { return id(c.row, c.column); }
  GridCoord coord(Vertex v) const;

  VertexSet row(int i) const;
  VertexSet column(int j) const;
  VertexSet cross(int i, int j) const { return set_union(row(i), column(j)); }

 private:
  int r_;
  Graph graph_;
};

GridGraph make_grid(int r);

// True iff some row together with some column lies inside b.
bool contains_cross(const GridGraph& w, const VertexSet& b);

// If g is exactly make_grid(r).graph() for some r, returns r; else 0.
int grid_size_of(const Graph& g);

}  // namespace tanglekit
