#include "tanglekit/minor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <queue>

namespace tanglekit {

std::string_view to_string(ModelViolationKind kind) {
  switch (kind) {
    case ModelViolationKind::WrongBranchSetCount: return "WrongBranchSetCount";
    case ModelViolationKind::EmptyBranchSet: return "EmptyBranchSet";
    case ModelViolationKind::VertexOutOfRange: return "VertexOutOfRange";
    case ModelViolationKind::OverlappingBranchSets: return "OverlappingBranchSets";
    case ModelViolationKind::DisconnectedBranchSet: return "DisconnectedBranchSet";
    case ModelViolationKind::MissingPatternEdge: return "MissingPatternEdge";
  }
  return "?";
}

ModelReport validate_model(const MinorModel& m) {
  ModelReport report;
  auto fail = [&report](ModelViolationKind kind, std::string message) {
    report.violations.push_back({kind, std::move(message)});
  };
  if (m.branch_sets.size() != static_cast<std::size_t>(m.pattern.vertex_count())) {
    fail(ModelViolationKind::WrongBranchSetCount, std::to_string(m.branch_sets.size()) + " branch sets for " +
                                                      std::to_string(m.pattern.vertex_count()) + " pattern vertices");
    report.valid = false;
    return report;
  }
  std::vector<int> owner(static_cast<std::size_t>(m.host.vertex_count()), -1);
  bool ids_ok = true;
  for (std::size_t h = 0; h < m.branch_sets.size(); ++h) {
    const VertexSet& set = m.branch_sets[h];
    if (set.empty()) {
      fail(ModelViolationKind::EmptyBranchSet, "branch set " + std::to_string(h) + " is empty");
    }
    for (Vertex v : set) {
      if (!m.host.has_vertex(v)) {
        fail(ModelViolationKind::VertexOutOfRange, "branch set " + std::to_string(h) + " uses vertex " +
                                                       std::to_string(v));
        ids_ok = false;
        continue;
      }
      int& o = owner[static_cast<std::size_t>(v)];
      if (o >= 0 && o != static_cast<int>(h)) {
        fail(ModelViolationKind::OverlappingBranchSets, "vertex " + std::to_string(v) + " in branch sets " +
                                                            std::to_string(o) + " and " + std::to_string(h));
      }
      o = static_cast<int>(h);
    }
  }
  if (ids_ok) {
    for (std::size_t h = 0; h < m.branch_sets.size(); ++h) {
      const VertexSet& set = m.branch_sets[h];
      if (!set.empty() && !induces_connected(m.host, set)) {
        fail(ModelViolationKind::DisconnectedBranchSet, "branch set " + std::to_string(h) + " is disconnected");
      }
    }
    for (const Edge& e : m.pattern.edges()) {
      bool realized = false;
      for (Vertex x : m.branch_set(e.u)) {
        for (Vertex y : m.host.neighbors(x)) {
          if (set_contains(m.branch_set(e.v), y)) {
            realized = true;
            break;
          }
        }
        if (realized) break;
      }
      if (!realized) {
        fail(ModelViolationKind::MissingPatternEdge, "no host edge between branch sets " + std::to_string(e.u) +
                                                         " and " + std::to_string(e.v));
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

MinorModel identity_model(const Graph& g) {
  MinorModel m{g, g, {}};
  for (Vertex v = 0; v < g.vertex_count(); ++v) m.branch_sets.push_back({v});
  return m;
}

namespace {

void require_valid(const MinorModel& m) {
  const ModelReport report = validate_model(m);
  if (!report.valid) throw Error(ErrorCode::InvalidModel, report.first()->message);
}

}  // namespace

Separation induced_separation(const MinorModel& m, const Separation& s) {
  require_valid(m);
  if (!is_separation(m.host, s)) throw Error(ErrorCode::NotASeparation, format_separation(s));
  VertexSet a;
  VertexSet b;
  for (Vertex h = 0; h < m.pattern.vertex_count(); ++h) {
    const VertexSet& branch = m.branch_set(h);
    if (!set_intersection(branch, s.side_a()).empty()) a.push_back(h);
    if (!set_intersection(branch, s.side_b()).empty()) b.push_back(h);
  }
  return Separation(std::move(a), std::move(b));
}

int branch_sets_meeting(const MinorModel& m, const VertexSet& vertices) {
  int count = 0;
  for (const VertexSet& branch : m.branch_sets) {
    if (!set_intersection(branch, vertices).empty()) ++count;
  }
  return count;
}

bool extended_membership(const MinorModel& m, const Tangle& pattern_tangle, const Separation& s) {
  const Separation induced = induced_separation(m, s);
  return s.order() < pattern_tangle.order() && pattern_tangle.contains(induced);
}

Tangle extended_tangle(const MinorModel& m, const Tangle& pattern_tangle) {
  require_valid(m);
  auto model = std::make_shared<const MinorModel>(m);
  return Tangle::from_predicate(m.host, pattern_tangle.order(), [model, pattern_tangle](const Separation& s) {
    return is_separation(model->host, s) && extended_membership(*model, pattern_tangle, s);
  });
}

namespace {

using Mask = std::uint32_t;

class MinorSearch {
 public:
  MinorSearch(const Graph& host, const Graph& pattern) : host_(host), pattern_(pattern) {
    const int n = host.vertex_count();
    nbr_.assign(static_cast<std::size_t>(n), 0);
    for (const Edge& e : host.edges()) {
      nbr_[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
      nbr_[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
    }
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
      if (connected(s)) connected_sets_.push_back(s);
    }
    std::stable_sort(connected_sets_.begin(), connected_sets_.end(),
                     [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
    order_pattern();
    placed_.assign(static_cast<std::size_t>(pattern.vertex_count()), 0);
  }

  std::optional<std::vector<Mask>> run() {
    if (pattern_.vertex_count() > host_.vertex_count()) return std::nullopt;
    if (pattern_.edge_count() > host_.edge_count()) return std::nullopt;
    if (extend(0, 0)) return placed_;
    return std::nullopt;
  }

 private:
  bool connected(Mask s) const {
    Mask reach = s & (~s + 1);
    Mask frontier = reach;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= nbr_[static_cast<std::size_t>(std::countr_zero(f))];
      next &= s & ~reach;
      reach |= next;
      frontier = next;
    }
    return reach == s;
  }

  Mask neighborhood(Mask s) const {
    Mask out = 0;
    for (Mask f = s; f != 0; f &= f - 1) out |= nbr_[static_cast<std::size_t>(std::countr_zero(f))];
    return out & ~s;
  }

  // BFS order starting from a maximum-degree vertex of each component, so
  // most vertices have a placed neighbour when their turn comes.
  void order_pattern() {
    const int p = pattern_.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(p), 0);
    while (static_cast<int>(order_.size()) < p) {
      Vertex start = -1;
      for (Vertex v = 0; v < p; ++v) {
        if (!seen[static_cast<std::size_t>(v)] && (start < 0 || pattern_.degree(v) > pattern_.degree(start))) start = v;
      }
      std::queue<Vertex> queue;
      queue.push(start);
      seen[static_cast<std::size_t>(start)] = 1;
      while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop();
        order_.push_back(v);
        for (Vertex w : pattern_.neighbors(v)) {
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = 1;
            queue.push(w);
          }
        }
      }
    }
    position_.assign(static_cast<std::size_t>(p), 0);
    for (std::size_t i = 0; i < order_.size(); ++i) position_[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
  }

  bool extend(std::size_t depth, Mask used) {
    if (depth == order_.size()) return true;
    const Vertex h = order_[depth];
    const int remaining_after = static_cast<int>(order_.size() - depth - 1);
    const int free_count = host_.vertex_count() - std::popcount(used);
    bool has_later_neighbor = false;
    for (Vertex x : pattern_.neighbors(h)) {
      if (position_[static_cast<std::size_t>(x)] > static_cast<int>(depth)) has_later_neighbor = true;
    }
    for (Mask s : connected_sets_) {
      if ((s & used) != 0) continue;
      if (std::popcount(s) > free_count - remaining_after) break;
      const Mask around = neighborhood(s);
      bool ok = true;
      for (Vertex x : pattern_.neighbors(h)) {
        if (position_[static_cast<std::size_t>(x)] < static_cast<int>(depth) &&
            (around & placed_[static_cast<std::size_t>(x)]) == 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const Mask now_used = used | s;
      if (has_later_neighbor && (around & ~now_used) == 0) continue;
      if (!earlier_sets_can_grow(depth, now_used)) continue;
      placed_[static_cast<std::size_t>(h)] = s;
      if (extend(depth + 1, now_used)) return true;
    }
    placed_[static_cast<std::size_t>(h)] = 0;
    return false;
  }

  // Placed branch sets with unplaced pattern neighbours still need a free
  // host vertex next to them.
  bool earlier_sets_can_grow(std::size_t depth, Mask used) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex x = order_[i];
      bool pending = false;
      for (Vertex y : pattern_.neighbors(x)) {
        if (position_[static_cast<std::size_t>(y)] > static_cast<int>(depth)) pending = true;
      }
      if (pending && (neighborhood(placed_[static_cast<std::size_t>(x)]) & ~used) == 0) return false;
    }
    return true;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<Mask> nbr_;
  std::vector<Mask> connected_sets_;
  std::vector<Vertex> order_;
  std::vector<int> position_;
  std::vector<Mask> placed_;
};

}  // namespace

std::optional<MinorModel> find_minor_model(const Graph& host, const Graph& pattern, const MinorSearchCaps& caps) {
  if (host.vertex_count() > caps.max_host_vertices || host.vertex_count() > 30) {
    throw Error(ErrorCode::InstanceTooLarge, "host has " + std::to_string(host.vertex_count()) + " vertices");
  }
  if (pattern.vertex_count() > caps.max_pattern_vertices) {
    throw Error(ErrorCode::InstanceTooLarge, "pattern has " + std::to_string(pattern.vertex_count()) + " vertices");
  }
  MinorSearch search(host, pattern);
  auto masks = search.run();
  if (!masks) return std::nullopt;
  MinorModel model{host, pattern, {}};
  for (Mask m : *masks) {
    VertexSet set;
    for (; m != 0; m &= m - 1) set.push_back(std::countr_zero(m));
    model.branch_sets.push_back(std::move(set));
  }
  return model;
}

}  // namespace tanglekit
