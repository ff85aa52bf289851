#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tanglekit/graph.hpp"

namespace tanglekit {

struct Dart {
  Vertex tail;
  Vertex head;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

// Per-vertex cyclic order of neighbours; determines an orientable cellular
// embedding of a connected graph.
class RotationSystem {
 public:
  // Throws InvalidArgument unless each list is a permutation of the
  // vertex's neighbourhood.
  RotationSystem(Graph graph, std::vector<std::vector<Vertex>> rotation);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<Vertex>& rotation(Vertex v) const { return rotation_.at(static_cast<std::size_t>(v)); }
  // Neighbour following `from` in the cyclic order at v.
  Vertex successor(Vertex v, Vertex from) const;

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> rotation_;
  std::vector<std::vector<int>> position_;  // aligned with graph_.neighbors(v)
};

struct FaceSet {
  std::vector<std::vector<Dart>> faces;

  int count() const noexcept { return static_cast<int>(faces.size()); }
  std::vector<int> lengths() const;
  // Boundary walk of face f as the sequence of dart tails.
  std::vector<Vertex> boundary(int f) const;
};

// Successor of dart (u, v) is (v, w) where w follows u in the rotation at v.
// Faces are started from unvisited darts in ascending (tail, head) order.
FaceSet trace_faces(const RotationSystem& rs);

int euler_genus(const RotationSystem& rs);

// Rotation of a straight-line drawing: neighbours sorted counter-clockwise.
RotationSystem rotation_from_drawing(const Graph& g, const std::vector<std::pair<double, double>>& points);

// Minimum Euler genus over every rotation system of g, by enumeration.
// Throws InstanceTooLarge if there are more than max_systems candidates.
int min_euler_genus_exhaustive(const Graph& g, std::uint64_t max_systems = 20'000'000, int threads = 1);

}  // namespace tanglekit
