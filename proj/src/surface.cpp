#include "tanglekit/surface.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>

#include "tanglekit/parallel.hpp"

namespace tanglekit {

RotationSystem::RotationSystem(Graph graph, std::vector<std::vector<Vertex>> rotation)
    : graph_(std::move(graph)), rotation_(std::move(rotation)) {
  const int n = graph_.vertex_count();
  if (static_cast<int>(rotation_.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "rotation has " + std::to_string(rotation_.size()) + " entries for " +
                                                std::to_string(n) + " vertices");
  }
  position_.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    const auto& cyc = rotation_[static_cast<std::size_t>(v)];
    if (make_set(cyc) != graph_.neighbors(v) || cyc.size() != graph_.neighbors(v).size()) {
      throw Error(ErrorCode::InvalidArgument,
                  "rotation at " + std::to_string(v) + " is not a permutation of its neighbours");
    }
    const auto& nbrs = graph_.neighbors(v);
    auto& pos = position_[static_cast<std::size_t>(v)];
    pos.assign(nbrs.size(), 0);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const auto idx = std::lower_bound(nbrs.begin(), nbrs.end(), cyc[k]) - nbrs.begin();
      pos[static_cast<std::size_t>(idx)] = static_cast<int>(k);
    }
  }
}

Vertex RotationSystem::successor(Vertex v, Vertex from) const {
  const auto& nbrs = graph_.neighbors(v);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), from);
  if (it == nbrs.end() || *it != from) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(from) + " is not adjacent to " + std::to_string(v));
  }
  const auto& cyc = rotation_[static_cast<std::size_t>(v)];
  const int k = position_[static_cast<std::size_t>(v)][static_cast<std::size_t>(it - nbrs.begin())];
  return cyc[(static_cast<std::size_t>(k) + 1) % cyc.size()];
}

std::vector<int> FaceSet::lengths() const {
  std::vector<int> out;
  out.reserve(faces.size());
  for (const auto& f : faces) out.push_back(static_cast<int>(f.size()));
  return out;
}

std::vector<Vertex> FaceSet::boundary(int f) const {
  std::vector<Vertex> out;
  for (const Dart& d : faces.at(static_cast<std::size_t>(f))) out.push_back(d.tail);
  return out;
}

namespace {

// Dart (u, v) is indexed by the position of v in u's sorted neighbour list.
struct DartIndex {
  explicit DartIndex(const Graph& g) : offset(static_cast<std::size_t>(g.vertex_count()) + 1, 0) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      offset[static_cast<std::size_t>(v) + 1] = offset[static_cast<std::size_t>(v)] + static_cast<std::size_t>(g.degree(v));
    }
  }
  std::size_t of(const Graph& g, Dart d) const {
    const auto& nbrs = g.neighbors(d.tail);
    return offset[static_cast<std::size_t>(d.tail)] +
           static_cast<std::size_t>(std::lower_bound(nbrs.begin(), nbrs.end(), d.head) - nbrs.begin());
  }
  std::vector<std::size_t> offset;
};

}  // namespace

FaceSet trace_faces(const RotationSystem& rs) {
  const Graph& g = rs.graph();
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, "face tracing needs a connected graph");
  FaceSet out;
  if (g.edge_count() == 0) {
    out.faces.emplace_back();
    return out;
  }
  const DartIndex index(g);
  std::vector<char> used(index.offset.back(), 0);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      Dart start{u, v};
      if (used[index.of(g, start)]) continue;
      std::vector<Dart> face;
      Dart d = start;
      do {
        used[index.of(g, d)] = 1;
        face.push_back(d);
        d = Dart{d.head, rs.successor(d.head, d.tail)};
      } while (d != start);
      out.faces.push_back(std::move(face));
    }
  }
  return out;
}

int euler_genus(const RotationSystem& rs) {
  const Graph& g = rs.graph();
  const FaceSet faces = trace_faces(rs);
  return 2 - g.vertex_count() + g.edge_count() - faces.count();
}

RotationSystem rotation_from_drawing(const Graph& g, const std::vector<std::pair<double, double>>& points) {
  if (points.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw Error(ErrorCode::InvalidArgument, "one point per vertex required");
  }
  std::vector<std::vector<Vertex>> rotation(points.size());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto cyc = g.neighbors(v);
    const auto [x, y] = points[static_cast<std::size_t>(v)];
    std::sort(cyc.begin(), cyc.end(), [&](Vertex a, Vertex b) {
      const auto& pa = points[static_cast<std::size_t>(a)];
      const auto& pb = points[static_cast<std::size_t>(b)];
      return std::atan2(pa.second - y, pa.first - x) < std::atan2(pb.second - y, pb.first - x);
    });
    rotation[static_cast<std::size_t>(v)] = std::move(cyc);
  }
  return RotationSystem(g, std::move(rotation));
}

int min_euler_genus_exhaustive(const Graph& g, std::uint64_t max_systems, int threads) {
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, "genus needs a connected graph");
  const int n = g.vertex_count();
  // Fix each cyclic order's first entry; the rest is a permutation.
  std::vector<std::uint64_t> choices(static_cast<std::size_t>(n), 1);
  std::uint64_t total = 1;
  for (Vertex v = 0; v < n; ++v) {
    std::uint64_t f = 1;
    for (int k = 2; k < g.degree(v); ++k) f *= static_cast<std::uint64_t>(k);
    choices[static_cast<std::size_t>(v)] = f;
    if (total > max_systems / f) {
      throw Error(ErrorCode::InstanceTooLarge, "too many rotation systems");
    }
    total *= f;
  }
  auto nth_permutation = [](std::vector<Vertex> items, std::uint64_t rank) {
    // items[0] stays fixed; the tail is permuted by factorial-base digits.
    std::vector<Vertex> out{items.front()};
    items.erase(items.begin());
    while (!items.empty()) {
      std::uint64_t f = 1;
      for (std::size_t k = 2; k < items.size(); ++k) f *= k;
      const std::size_t pick = static_cast<std::size_t>(rank / f);
      rank %= f;
      out.push_back(items[pick]);
      items.erase(items.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
  };
  std::vector<int> best(static_cast<std::size_t>(std::max(threads, 1)), std::numeric_limits<int>::max());
  parallel_slices(static_cast<std::size_t>(total), threads, [&](std::size_t begin, std::size_t end, std::size_t w) {
    for (std::size_t code = begin; code < end; ++code) {
      std::uint64_t rest = code;
      std::vector<std::vector<Vertex>> rotation(static_cast<std::size_t>(n));
      for (Vertex v = 0; v < n; ++v) {
        const std::uint64_t c = choices[static_cast<std::size_t>(v)];
        const auto& nbrs = g.neighbors(v);
        rotation[static_cast<std::size_t>(v)] = nbrs.empty() ? nbrs : nth_permutation(nbrs, rest % c);
        rest /= c;
      }
      best[w] = std::min(best[w], euler_genus(RotationSystem(g, std::move(rotation))));
    }
  });
  return *std::min_element(best.begin(), best.end());
}

}  // namespace tanglekit
