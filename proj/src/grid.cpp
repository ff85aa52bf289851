#include "tanglekit/grid.hpp"

#include <string>
#include <vector>

namespace tanglekit {

namespace {

Graph build_grid_graph(int r) {
  std::vector<Edge> edges;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const Vertex v = i * r + j;
      if (j + 1 < r) edges.push_back(Edge{v, v + 1});
      if (i + 1 < r) edges.push_back(Edge{v, v + r});
    }
  }
  return Graph(r * r, edges);
}

}  // namespace

GridGraph::GridGraph(int r) : r_(r) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "grid size must be positive");
  graph_ = build_grid_graph(r);
}

Vertex GridGraph::id(int row, int column) const {
  if (row < 1 || row > r_ || column < 1 || column > r_) {
    throw Error(ErrorCode::VertexOutOfRange,
                "(" + std::to_string(row) + "," + std::to_string(column) + ") outside W_" + std::to_string(r_));
  }
  return (row - 1) * r_ + (column - 1);
}

GridCoord GridGraph::coord(Vertex v) const {
  if (!graph_.has_vertex(v)) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  return GridCoord{v / r_ + 1, v % r_ + 1};
}

VertexSet GridGraph::row(int i) const {
  VertexSet out;
  for (int j = 1; j <= r_; ++j) out.push_back(id(i, j));
  return out;
}

VertexSet GridGraph::column(int j) const {
  VertexSet out;
  for (int i = 1; i <= r_; ++i) out.push_back(id(i, j));
  return out;
}

GridGraph make_grid(int r) { return GridGraph(r); }

bool contains_cross(const GridGraph& w, const VertexSet& b) {
  const int r = w.r();
  std::vector<int> row_hits(static_cast<std::size_t>(r), 0);
  std::vector<int> column_hits(static_cast<std::size_t>(r), 0);
  for (Vertex v : b) {
    if (!w.graph().has_vertex(v)) continue;
    const GridCoord c = w.coord(v);
    ++row_hits[static_cast<std::size_t>(c.row - 1)];
    ++column_hits[static_cast<std::size_t>(c.column - 1)];
  }
  for (int i = 0; i < r; ++i) {
    if (row_hits[static_cast<std::size_t>(i)] != r) continue;
    for (int j = 0; j < r; ++j) {
      if (column_hits[static_cast<std::size_t>(j)] == r) return true;
    }
  }
  return false;
}

int grid_size_of(const Graph& g) {
  int r = 1;
  while (r * r < g.vertex_count()) ++r;
  if (r * r != g.vertex_count() || g.vertex_count() == 0) return 0;
  return g == build_grid_graph(r) ? r : 0;
}

}  // namespace tanglekit
