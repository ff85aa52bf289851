#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tanglekit/graph.hpp"

namespace tanglekit {

// Ordered pair (A, B). By convention side_b is the "large side" whenever a
// tangle orients the separation.
class Separation {
 public:
  Separation() = default;
  Separation(VertexSet side_a, VertexSet side_b)
      : side_a_(make_set(std::move(side_a))), side_b_(make_set(std::move(side_b))) {}

  const VertexSet& side_a() const noexcept { return side_a_; }
  const VertexSet& side_b() const noexcept { return side_b_; }
  VertexSet separator() const { return set_intersection(side_a_, side_b_); }
  int order() const { return static_cast<int>(separator().size()); }
  Separation reversed() const { return Separation(side_b_, side_a_); }

  friend auto operator<=>(const Separation&, const Separation&) = default;

 private:
  VertexSet side_a_;
  VertexSet side_b_;
};

bool is_separation(const Graph& g, const VertexSet& a, const VertexSet& b);
inline bool is_separation(const Graph& g, const Separation& s) {
  return is_separation(g, s.side_a(), s.side_b());
}

struct EnumerationLimits {
  int max_vertices = kDefaultBruteForceCap;
  int threads = 1;
};

// Every ordered separation of order <= max_order, each exactly once, sorted
// by canonical (A, B) key.
std::vector<Separation> enumerate_separations(const Graph& g, int max_order,
                                              const EnumerationLimits& limits = {});

std::string format_separation(const Separation& s);

}  // namespace tanglekit
