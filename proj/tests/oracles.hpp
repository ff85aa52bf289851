#pragma once
// Independent brute-force references. Deliberately naive and separate from
// the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "tanglekit/graph.hpp"
#include "tanglekit/separation.hpp"

namespace oracle {

using tanglekit::Graph;
using tanglekit::Separation;
using tanglekit::Vertex;

// Every (A, B) with A u B = V, no A\B - B\A edge, |A n B| <= max_order, by
// putting each vertex in A only, B only or both (3^n assignments).
inline std::vector<Separation> separations(const Graph& g, int max_order) {
  const int n = g.vertex_count();
  std::vector<int> side(static_cast<std::size_t>(n), 0);
  std::vector<Separation> out;
  while (true) {
    bool ok = true;
    int both = 0;
    for (int v = 0; v < n; ++v) both += side[static_cast<std::size_t>(v)] == 2;
    if (both > max_order) ok = false;
    for (const auto& e : g.edges()) {
      const int a = side[static_cast<std::size_t>(e.u)];
      const int b = side[static_cast<std::size_t>(e.v)];
      if ((a == 0 && b == 1) || (a == 1 && b == 0)) ok = false;
    }
    if (ok) {
      std::vector<Vertex> A, B;
      for (int v = 0; v < n; ++v) {
        if (side[static_cast<std::size_t>(v)] != 1) A.push_back(v);
        if (side[static_cast<std::size_t>(v)] != 0) B.push_back(v);
      }
      out.emplace_back(A, B);
    }
    int k = 0;
    while (k < n && side[static_cast<std::size_t>(k)] == 2) side[static_cast<std::size_t>(k++)] = 0;
    if (k == n) break;
    ++side[static_cast<std::size_t>(k)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Row i, column j of the r x r grid with id (i-1)r + (j-1).
inline bool has_cross(int r, const std::vector<Vertex>& b) {
  std::set<Vertex> in(b.begin(), b.end());
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) {
      bool all = true;
      for (int t = 1; t <= r; ++t) {
        all = all && in.count((i - 1) * r + (t - 1)) && in.count((t - 1) * r + (j - 1));
      }
      if (all) return true;
    }
  }
  return false;
}

// Face count from an explicit rotation list: successor of (u,v) is (v,w)
// with w after u in the cyclic list at v.
inline int face_count(const std::vector<std::vector<Vertex>>& rot) {
  std::set<std::pair<Vertex, Vertex>> unused;
  for (Vertex u = 0; u < static_cast<Vertex>(rot.size()); ++u) {
    for (Vertex v : rot[static_cast<std::size_t>(u)]) unused.insert({u, v});
  }
  int faces = 0;
  while (!unused.empty()) {
    auto d = *unused.begin();
    ++faces;
    while (unused.erase(d)) {
      const auto& at = rot[static_cast<std::size_t>(d.second)];
      const auto it = std::find(at.begin(), at.end(), d.first);
      const Vertex w = (it + 1 == at.end()) ? at.front() : *(it + 1);
      d = {d.second, w};
    }
  }
  return faces;
}

inline bool connected_after(const Graph& g, std::uint32_t removed) {
  const int n = g.vertex_count();
  int start = -1, alive = 0;
  for (int v = 0; v < n; ++v) {
    if (!((removed >> v) & 1u)) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{start};
  seen[static_cast<std::size_t>(start)] = true;
  int reached = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int w : g.neighbors(v)) {
      if (!((removed >> w) & 1u) && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return reached == alive;
}

// Least |X| with G - X disconnected; n - 1 when no such X exists.
inline int connectivity(const Graph& g) {
  const int n = g.vertex_count();
  int best = n - 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best || n - size < 2) continue;
    if (!connected_after(g, mask)) best = size;
  }
  return best;
}

// Least |X| cutting every S-T path (X may meet S and T).
inline int min_cut(const Graph& g, const std::vector<Vertex>& s, const std::vector<Vertex>& t) {
  const int n = g.vertex_count();
  int best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack;
    for (Vertex v : s) {
      if (!((mask >> v) & 1u)) {
        seen[static_cast<std::size_t>(v)] = true;
        stack.push_back(v);
      }
    }
    bool reach = false;
    while (!stack.empty() && !reach) {
      const int v = stack.back();
      stack.pop_back();
      if (std::find(t.begin(), t.end(), v) != t.end()) reach = true;
      for (int w : g.neighbors(v)) {
        if (!((mask >> w) & 1u) && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
    if (!reach) best = size;
  }
  return best;
}

}  // namespace oracle
