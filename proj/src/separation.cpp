#include "tanglekit/separation.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

#include "tanglekit/parallel.hpp"

namespace tanglekit {

bool is_separation(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (Vertex v : a) {
    if (!g.has_vertex(v)) return false;
  }
  for (Vertex v : b) {
    if (!g.has_vertex(v)) return false;
  }
  if (set_union(a, b).size() != static_cast<std::size_t>(g.vertex_count())) return false;
  const VertexSet only_a = set_difference(a, b);
  const VertexSet only_b = set_difference(b, a);
  for (const Edge& e : g.edges()) {
    const bool ua = set_contains(only_a, e.u);
    const bool va = set_contains(only_a, e.v);
    const bool ub = set_contains(only_b, e.u);
    const bool vb = set_contains(only_b, e.v);
    if ((ua && vb) || (va && ub)) return false;
  }
  return true;
}

namespace {

using Mask = std::uint64_t;

VertexSet to_set(Mask m) {
  VertexSet out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

// Gosper's hack over all subsets of {0..n-1} of each size <= max_size.
std::vector<Mask> subsets_up_to(int n, int max_size) {
  std::vector<Mask> out;
  for (int k = 0; k <= std::min(n, max_size); ++k) {
    if (k == 0) {
      out.push_back(0);
      continue;
    }
    Mask m = (Mask{1} << k) - 1;
    const Mask limit = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
    while (m <= limit) {
      out.push_back(m);
      const Mask c = m & (~m + 1);
      const Mask r = m + c;
      if (r == 0) break;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  return out;
}

std::vector<Mask> components_mask(const std::vector<Mask>& nbr, Mask alive) {
  std::vector<Mask> comps;
  while (alive != 0) {
    Mask comp = alive & (~alive + 1);
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= nbr[static_cast<std::size_t>(std::countr_zero(f))];
      next &= alive & ~comp;
      comp |= next;
      frontier = next;
    }
    comps.push_back(comp);
    alive &= ~comp;
  }
  return comps;
}

}  // namespace

std::vector<Separation> enumerate_separations(const Graph& g, int max_order, const EnumerationLimits& limits) {
  const int n = g.vertex_count();
  if (n > limits.max_vertices || n > 63) {
    throw Error(ErrorCode::InstanceTooLarge, std::to_string(n) + " vertices exceeds enumeration cap " +
                                                 std::to_string(limits.max_vertices));
  }
  if (max_order < 0) return {};
  std::vector<Mask> nbr(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    nbr[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
    nbr[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
  }
  const Mask all = n == 0 ? 0 : ((Mask{1} << n) - 1);
  const std::vector<Mask> separators = subsets_up_to(n, max_order);

  // A separation with A ∩ B = S puts every component of g - S wholly into
  // A \ B or B \ A; distinct S give distinct pairs, so no duplicates arise.
  std::vector<std::vector<std::pair<Mask, Mask>>> found(static_cast<std::size_t>(std::max(limits.threads, 1)));
  parallel_slices(separators.size(), limits.threads, [&](std::size_t begin, std::size_t end, std::size_t worker) {
    auto& local = found[worker];
    for (std::size_t i = begin; i < end; ++i) {
      const Mask sep = separators[i];
      const std::vector<Mask> comps = components_mask(nbr, all & ~sep);
      const std::uint64_t choices = std::uint64_t{1} << comps.size();
      for (std::uint64_t pick = 0; pick < choices; ++pick) {
        Mask a = sep;
        Mask b = sep;
        for (std::size_t c = 0; c < comps.size(); ++c) {
          if ((pick >> c) & 1u) {
            a |= comps[c];
          } else {
            b |= comps[c];
          }
        }
        local.emplace_back(a, b);
      }
    }
  });
  std::vector<Separation> out;
  for (const auto& local : found) {
    for (const auto& [a, b] : local) out.emplace_back(to_set(a), to_set(b));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {
std::string join_ids(const VertexSet& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != 0) os << ',';
    os << s[i];
  }
  return os.str();
}
}  // namespace

std::string format_separation(const Separation& s) {
  return "sep A=" + join_ids(s.side_a()) + " B=" + join_ids(s.side_b());
}

}  // namespace tanglekit
