#include "tanglekit/tangle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <tuple>

#include "tanglekit/parallel.hpp"

namespace tanglekit {

Tangle Tangle::from_members(Graph ground, int order, std::vector<Separation> members) {
  Tangle t;
  t.ground_ = std::make_shared<const Graph>(std::move(ground));
  t.order_ = order;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  t.materialized_ = std::move(members);
  t.materialized_order_ = std::numeric_limits<int>::max();
  return t;
}

Tangle Tangle::from_predicate(Graph ground, int order, MembershipPredicate predicate) {
  Tangle t;
  t.ground_ = std::make_shared<const Graph>(std::move(ground));
  t.order_ = order;
  t.predicate_ = std::move(predicate);
  return t;
}

bool Tangle::contains(const Separation& s) const {
  if (materialized_ && (!predicate_ || s.order() <= materialized_order_)) {
    return std::binary_search(materialized_->begin(), materialized_->end(), s);
  }
  if (!predicate_) return false;
  return predicate_(s);
}

void Tangle::materialize(const EnumerationLimits& limits, std::optional<int> max_order) {
  if (!predicate_) return;
  int top = order_ - 1;
  if (max_order) top = std::min(top, *max_order);
  std::vector<Separation> members;
  for (Separation& s : enumerate_separations(*ground_, top, limits)) {
    if (predicate_(s)) members.push_back(std::move(s));
  }
  materialized_ = std::move(members);
  materialized_order_ = top;
}

const std::vector<Separation>& Tangle::members() const {
  if (!materialized_) throw Error(ErrorCode::InvalidArgument, "tangle is not materialized");
  return *materialized_;
}

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::Order: return "ORDER";
    case Axiom::Invalid: return "INVALID";
    case Axiom::T1: return "T1";
    case Axiom::T2: return "T2";
    case Axiom::T3: return "T3";
  }
  return "?";
}

namespace {

using Mask = std::uint64_t;

struct MemberShape {
  Mask vertices = 0;
  std::vector<Mask> edges;  // bit e set iff edge e lies inside A
};

MemberShape shape_of(const Graph& g, const VertexSet& a, std::size_t edge_words) {
  MemberShape shape;
  shape.edges.assign(edge_words, 0);
  for (Vertex v : a) shape.vertices |= Mask{1} << v;
  const auto& edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (((shape.vertices >> edges[e].u) & 1u) && ((shape.vertices >> edges[e].v) & 1u)) {
      shape.edges[e / 64] |= Mask{1} << (e % 64);
    }
  }
  return shape;
}

using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;

std::optional<Triple> first_covering_triple(const Graph& g, const std::vector<Separation>& members, int threads) {
  const std::size_t edge_words = (static_cast<std::size_t>(g.edge_count()) + 63) / 64;
  std::vector<MemberShape> shapes;
  shapes.reserve(members.size());
  for (const Separation& s : members) shapes.push_back(shape_of(g, s.side_a(), edge_words));
  const Mask all_vertices = g.vertex_count() == 0 ? 0 : (~Mask{0} >> (64 - g.vertex_count()));
  std::vector<Mask> all_edges(edge_words, 0);
  for (std::size_t e = 0; e < static_cast<std::size_t>(g.edge_count()); ++e) all_edges[e / 64] |= Mask{1} << (e % 64);

  const std::size_t m = shapes.size();
  std::vector<std::optional<Triple>> hits(static_cast<std::size_t>(std::max(threads, 1)));
  parallel_slices(m, threads, [&](std::size_t begin, std::size_t end, std::size_t worker) {
    std::vector<Mask> covered(edge_words);
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = i; j < m; ++j) {
        const Mask vij = shapes[i].vertices | shapes[j].vertices;
        for (std::size_t w = 0; w < edge_words; ++w) covered[w] = shapes[i].edges[w] | shapes[j].edges[w];
        for (std::size_t k = j; k < m; ++k) {
          if ((vij | shapes[k].vertices) != all_vertices) continue;
          bool full = true;
          for (std::size_t w = 0; w < edge_words && full; ++w) {
            full = (covered[w] | shapes[k].edges[w]) == all_edges[w];
          }
          if (full) {
            hits[worker] = Triple{i, j, k};
            return;
          }
        }
      }
    }
  });
  for (const auto& hit : hits) {
    if (hit) return hit;
  }
  return std::nullopt;
}

}  // namespace

AxiomReport check_axioms(const Graph& g, const Tangle& t, const AxiomCheckOptions& options) {
  if (g.vertex_count() > 63) {
    throw Error(ErrorCode::InstanceTooLarge, "axiom check supports at most 63 vertices");
  }
  int top = t.order() - 1;
  if (options.max_order) top = std::min(top, *options.max_order);
  const std::vector<Separation> all = enumerate_separations(g, top, options.limits);

  AxiomReport report;
  report.separations_checked = static_cast<int>(all.size());

  std::vector<Separation> members;
  for (const Separation& s : all) {
    if (t.contains(s)) members.push_back(s);
  }
  // Explicitly listed members that the enumeration cannot produce.
  if (t.is_materialized()) {
    for (const Separation& s : t.members()) {
      if (!is_separation(g, s)) {
        report.violations.push_back({Axiom::Invalid, {s}, "member is not a separation of the graph"});
      } else if (s.order() >= t.order()) {
        report.violations.push_back({Axiom::Order, {s}, "member order reaches the tangle order"});
      }
    }
  }
  report.members = static_cast<int>(members.size());

  for (const Separation& s : all) {
    const Separation r = s.reversed();
    if (r < s) continue;  // each unoriented separation once
    if (!t.contains(s) && !t.contains(r)) {
      report.violations.push_back({Axiom::T1, {s}, "neither orientation is a member"});
    }
  }

  if (auto triple = first_covering_triple(g, members, options.limits.threads)) {
    const auto [i, j, k] = *triple;
    report.violations.push_back(
        {Axiom::T2, {members[i], members[j], members[k]}, "G[A1] u G[A2] u G[A3] = G"});
  }

  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  for (const Separation& s : members) {
    if (s.side_a().size() == n) {
      report.violations.push_back({Axiom::T3, {s}, "member has A = V(G)"});
    }
  }

  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const AxiomViolation& a, const AxiomViolation& b) { return a.axiom < b.axiom; });
  report.passed = report.violations.empty();
  return report;
}

bool natural_membership(const GridGraph& w, const Separation& s) {
  if (!is_separation(w.graph(), s)) {
    throw Error(ErrorCode::NotASeparation, format_separation(s));
  }
  return s.order() < w.r() && contains_cross(w, s.side_b());
}

Tangle natural_tangle(const GridGraph& w) {
  return Tangle::from_predicate(w.graph(), w.r(), [w](const Separation& s) {
    return is_separation(w.graph(), s) && natural_membership(w, s);
  });
}

TruncatedTangle truncate(const Graph& g, const Tangle& t, const VertexSet& apex) {
  const VertexSet a = make_set(apex);
  for (Vertex v : a) {
    if (!g.has_vertex(v)) throw Error(ErrorCode::VertexOutOfRange, "apex vertex " + std::to_string(v));
  }
  if (static_cast<int>(a.size()) >= t.order()) {
    throw Error(ErrorCode::ApexTooLarge, "|A| = " + std::to_string(a.size()) + " but tangle order is " +
                                             std::to_string(t.order()));
  }
  Subgraph remainder = delete_vertices(g, a);
  const int order = t.order() - static_cast<int>(a.size());
  auto lifted = std::make_shared<Subgraph>(remainder);
  Tangle parent = t;
  Tangle truncated = Tangle::from_predicate(remainder.graph, order, [lifted, parent, a, order](const Separation& s) {
    if (s.order() >= order) return false;
    return parent.contains(Separation(set_union(lifted->lift(s.side_a()), a), set_union(lifted->lift(s.side_b()), a)));
  });
  return TruncatedTangle{std::move(remainder), std::move(truncated)};
}

}  // namespace tanglekit
