#include "tanglekit/vortex.hpp"

#include <algorithm>
#include <map>

namespace tanglekit {

std::vector<Vertex> Comb::teeth() const {
  std::vector<Vertex> out;
  out.reserve(teeth_paths.size());
  for (const Path& p : teeth_paths) {
    if (!p.empty()) out.push_back(p.back());
  }
  return out;
}

std::string_view to_string(VortexViolationKind kind) {
  switch (kind) {
    case VortexViolationKind::SocietyNotInGraph: return "SocietyNotInGraph";
    case VortexViolationKind::BagCountMismatch: return "BagCountMismatch";
    case VortexViolationKind::BagVertexOutOfRange: return "BagVertexOutOfRange";
    case VortexViolationKind::SocietyVertexNotInBag: return "SocietyVertexNotInBag";
    case VortexViolationKind::IntervalViolation: return "IntervalViolation";
    case VortexViolationKind::EdgeNotCovered: return "EdgeNotCovered";
    case VortexViolationKind::VertexNotCovered: return "VertexNotCovered";
    case VortexViolationKind::SocietyIntersectionViolation: return "SocietyIntersectionViolation";
    case VortexViolationKind::UnequalAdhesion: return "UnequalAdhesion";
    case VortexViolationKind::NoDisjointPathSystem: return "NoDisjointPathSystem";
    case VortexViolationKind::AdhesionIdentityViolation: return "AdhesionIdentityViolation";
    case VortexViolationKind::LinkageInvalid: return "LinkageInvalid";
  }
  return "?";
}

std::string_view to_string(CombViolationKind kind) {
  switch (kind) {
    case CombViolationKind::InvalidSpine: return "InvalidSpine";
    case CombViolationKind::InvalidToothPath: return "InvalidToothPath";
    case CombViolationKind::ToothPathOffSpine: return "ToothPathOffSpine";
    case CombViolationKind::ToothPathsIntersect: return "ToothPathsIntersect";
    case CombViolationKind::AttachmentOrder: return "AttachmentOrder";
    case CombViolationKind::TeethMismatch: return "TeethMismatch";
    case CombViolationKind::TeethOrderMismatch: return "TeethOrderMismatch";
  }
  return "?";
}

bool VortexReport::has(VortexViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const VortexViolation& v) { return v.kind == kind; });
}

namespace {

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

void add(VortexReport& r, VortexViolationKind kind, int bag, std::string message) {
  r.violations.push_back({kind, bag, std::move(message)});
  r.ok = false;
}

}  // namespace

VortexReport check_vortex_decomposition(const Vortex& v, const VortexDecomposition& d) {
  VortexReport r;
  const Graph& g = v.graph;
  for (Vertex w : v.society) {
    if (!g.has_vertex(w)) add(r, VortexViolationKind::SocietyNotInGraph, 0, "society vertex " + std::to_string(w));
  }
  if (v.society_set().size() != v.society.size()) {
    add(r, VortexViolationKind::SocietyNotInGraph, 0, "society lists a vertex twice");
  }
  if (d.bags.size() != v.society.size()) {
    add(r, VortexViolationKind::BagCountMismatch, 0,
        std::to_string(d.bags.size()) + " bags for society of length " + std::to_string(v.society.size()));
    return r;
  }
  for (std::size_t i = 0; i < d.bags.size(); ++i) {
    for (Vertex x : d.bags[i]) {
      if (!g.has_vertex(x)) {
        add(r, VortexViolationKind::BagVertexOutOfRange, static_cast<int>(i + 1), "vertex " + std::to_string(x));
      }
    }
  }
  if (!r.ok) return r;

  for (std::size_t i = 0; i < d.bags.size(); ++i) {
    if (!set_contains(d.bags[i], v.society[i])) {
      add(r, VortexViolationKind::SocietyVertexNotInBag, static_cast<int>(i + 1),
          "w_" + std::to_string(i + 1) + " = " + std::to_string(v.society[i]) + " missing from X_" +
              std::to_string(i + 1));
    }
  }
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    int first = -1;
    int last = -1;
    int hits = 0;
    for (std::size_t i = 0; i < d.bags.size(); ++i) {
      if (set_contains(d.bags[i], x)) {
        if (first < 0) first = static_cast<int>(i);
        last = static_cast<int>(i);
        ++hits;
      }
    }
    if (hits == 0) {
      add(r, VortexViolationKind::VertexNotCovered, 0, "vertex " + std::to_string(x) + " lies in no bag");
    } else if (hits != last - first + 1) {
      add(r, VortexViolationKind::IntervalViolation, first + 1,
          "bags containing vertex " + std::to_string(x) + " are not contiguous");
    }
  }
  for (const Edge& e : g.edges()) {
    const bool covered = std::any_of(d.bags.begin(), d.bags.end(), [&e](const VertexSet& bag) {
      return set_contains(bag, e.u) && set_contains(bag, e.v);
    });
    if (!covered) {
      add(r, VortexViolationKind::EdgeNotCovered, 0,
          "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " lies in no bag");
    }
  }
  // Stable by law order: membership, interval, coverage.
  std::stable_sort(r.violations.begin(), r.violations.end(), [](const VortexViolation& a, const VortexViolation& b) {
    auto rank = [](VortexViolationKind k) {
      switch (k) {
        case VortexViolationKind::SocietyVertexNotInBag: return 0;
        case VortexViolationKind::IntervalViolation: return 1;
        default: return 2;
      }
    };
    return rank(a.kind) < rank(b.kind);
  });
  return r;
}

namespace {

std::vector<VertexSet> adhesion_sets(const Vortex& v, const VortexDecomposition& d) {
  std::vector<VertexSet> z;
  const VertexSet omega = v.society_set();
  for (std::size_t i = 0; i + 1 < d.bags.size(); ++i) {
    z.push_back(set_difference(set_intersection(d.bags[i], d.bags[i + 1]), omega));
  }
  return z;
}

}  // namespace

LinkedReport check_linked(const Vortex& v, const VortexDecomposition& d) {
  LinkedReport r;
  static_cast<VortexReport&>(r) = check_vortex_decomposition(v, d);
  const std::size_t n = v.society.size();
  if (d.bags.size() != n) return r;

  // The society clause is reported even when the decomposition itself is
  // broken: a stray society vertex usually breaks the interval law too.
  const VertexSet omega = v.society_set();
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex previous = v.society[i == 0 ? 0 : i - 1];
    const VertexSet expected = make_set({previous, v.society[i]});
    const VertexSet actual = set_intersection(d.bags[i], omega);
    if (actual != expected) {
      add(r, VortexViolationKind::SocietyIntersectionViolation, static_cast<int>(i + 1),
          "X_" + std::to_string(i + 1) + " meets the society in " + set_text(actual) + ", expected " +
              set_text(expected));
    }
  }

  if (!r.ok) return r;

  r.adhesion_sets = adhesion_sets(v, d);
  const auto& z = r.adhesion_sets;
  r.q = z.empty() ? 0 : static_cast<int>(z.front().size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (static_cast<int>(z[i].size()) != r.q) {
      add(r, VortexViolationKind::UnequalAdhesion, static_cast<int>(i + 1),
          "|Z_" + std::to_string(i + 1) + "| = " + std::to_string(z[i].size()) + " but |Z_1| = " + std::to_string(r.q));
    }
    const VertexSet shared = set_intersection(d.bags[i], d.bags[i + 1]);
    if (shared != set_union(z[i], VertexSet{v.society[i]})) {
      add(r, VortexViolationKind::AdhesionIdentityViolation, static_cast<int>(i + 1),
          "X_" + std::to_string(i + 1) + " cap X_" + std::to_string(i + 2) + " != Z_" + std::to_string(i + 1) + " + {w_" +
              std::to_string(i + 1) + "}");
    }
  }
  if (!r.ok) return r;

  // Bags 2..n-1 each carry q disjoint Z_{i-1}-Z_i paths in G[X_i] - Ω.
  std::vector<std::map<Vertex, Path>> systems;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const Subgraph inside = induced_subgraph(v.graph, set_difference(d.bags[i], omega));
    std::vector<Vertex> to_local(static_cast<std::size_t>(v.graph.vertex_count()), -1);
    for (std::size_t k = 0; k < inside.to_parent.size(); ++k) to_local[static_cast<std::size_t>(inside.to_parent[k])] = static_cast<Vertex>(k);
    auto localize = [&to_local](const VertexSet& s) {
      VertexSet out;
      for (Vertex x : s) out.push_back(to_local[static_cast<std::size_t>(x)]);
      return make_set(std::move(out));
    };
    std::vector<Path> paths;
    if (r.q > 0) paths = max_disjoint_paths(inside.graph, localize(z[i - 1]), localize(z[i]));
    if (static_cast<int>(paths.size()) < r.q) {
      add(r, VortexViolationKind::NoDisjointPathSystem, static_cast<int>(i + 1),
          "only " + std::to_string(paths.size()) + " disjoint Z_" + std::to_string(i) + "-Z_" + std::to_string(i + 1) +
              " paths in G[X_" + std::to_string(i + 1) + "] - society, need " + std::to_string(r.q));
      continue;
    }
    std::map<Vertex, Path> by_start;
    for (const Path& p : paths) {
      std::vector<Vertex> lifted;
      for (Vertex x : p.vertices()) lifted.push_back(inside.parent_of(x));
      const Vertex start = lifted.front();
      by_start.emplace(start, Path(std::move(lifted)));
    }
    systems.push_back(std::move(by_start));
  }
  if (!r.ok) return r;

  r.linkage.adhesion = r.q;
  if (z.empty()) return r;
  for (Vertex start : z.front()) {
    std::vector<Vertex> walk{start};
    for (const auto& system : systems) {
      const Path& hop = system.at(walk.back());
      walk.insert(walk.end(), hop.vertices().begin() + 1, hop.vertices().end());
    }
    r.linkage.paths.emplace_back(std::move(walk));
  }
  const VortexReport composed = check_linkage(v, d, r.linkage);
  for (const auto& violation : composed.violations) add(r, violation.kind, violation.bag, violation.message);
  return r;
}

VortexReport check_linkage(const Vortex& v, const VortexDecomposition& d, const Linkage& linkage) {
  VortexReport r;
  const VertexSet omega = v.society_set();
  const std::vector<VertexSet> z = adhesion_sets(v, d);
  const std::size_t q = z.empty() ? 0 : z.front().size();
  if (linkage.paths.size() != q) {
    add(r, VortexViolationKind::LinkageInvalid, 0,
        std::to_string(linkage.paths.size()) + " linkage paths for adhesion " + std::to_string(q));
  }
  VertexSet used;
  for (std::size_t p = 0; p < linkage.paths.size(); ++p) {
    const Path& path = linkage.paths[p];
    const std::string label = "linkage path " + std::to_string(p + 1);
    if (!path.valid_in(v.graph)) {
      add(r, VortexViolationKind::LinkageInvalid, 0, label + " is not a path of the vortex");
      continue;
    }
    const VertexSet vs = path.vertex_set();
    if (!set_intersection(vs, omega).empty()) {
      add(r, VortexViolationKind::LinkageInvalid, 0, label + " meets the society");
    }
    if (!set_intersection(vs, used).empty()) {
      add(r, VortexViolationKind::LinkageInvalid, 0, label + " intersects an earlier path");
    }
    used = set_union(used, vs);
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (set_intersection(vs, z[i]).size() != 1) {
        add(r, VortexViolationKind::LinkageInvalid, static_cast<int>(i + 1),
            label + " does not meet Z_" + std::to_string(i + 1) + " exactly once");
      }
    }
    if (!d.bags.empty() && (!set_contains(d.bags.front(), path.front()) || !set_contains(d.bags.back(), path.back()))) {
      add(r, VortexViolationKind::LinkageInvalid, 0, label + " does not run from X_1 to X_n");
    }
  }
  return r;
}

CombReport comb_report(const Graph& g, const Comb& c, const std::vector<Vertex>& required_teeth,
                       const CombOptions& options) {
  CombReport r;
  auto fail = [&r](CombViolationKind kind, std::string message) {
    r.violations.push_back({kind, std::move(message)});
    r.ok = false;
  };
  if (!c.spine.valid_in(g)) {
    fail(CombViolationKind::InvalidSpine, "spine is not a path of the graph");
    return r;
  }
  const auto& spine = c.spine.vertices();
  const VertexSet spine_set = c.spine.vertex_set();
  VertexSet used;
  int previous_attachment = -1;
  for (std::size_t t = 0; t < c.teeth_paths.size(); ++t) {
    const Path& p = c.teeth_paths[t];
    const std::string label = "tooth path " + std::to_string(t + 1);
    if (!p.valid_in(g)) {
      fail(CombViolationKind::InvalidToothPath, label + " is not a path of the graph");
      continue;
    }
    const VertexSet on_spine = set_intersection(p.vertex_set(), spine_set);
    if (on_spine != VertexSet{p.front()}) {
      fail(CombViolationKind::ToothPathOffSpine, label + " must meet the spine exactly in its first vertex");
      continue;
    }
    if (!set_intersection(p.vertex_set(), used).empty()) {
      fail(CombViolationKind::ToothPathsIntersect, label + " meets an earlier tooth path");
    }
    used = set_union(used, p.vertex_set());
    const int attachment = static_cast<int>(std::find(spine.begin(), spine.end(), p.front()) - spine.begin());
    if (attachment < previous_attachment) {
      fail(CombViolationKind::AttachmentOrder, label + " attaches before the previous tooth");
    }
    previous_attachment = attachment;
  }
  if (!r.ok) return r;

  const std::vector<Vertex> teeth = c.teeth();
  if (teeth == required_teeth) return r;
  if (options.allow_reversed && std::equal(teeth.rbegin(), teeth.rend(), required_teeth.begin(), required_teeth.end())) {
    return r;
  }
  std::vector<Vertex> a = teeth;
  std::vector<Vertex> b = required_teeth;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a == b) {
    fail(CombViolationKind::TeethOrderMismatch, "teeth are the required vertices in the wrong order");
  } else {
    fail(CombViolationKind::TeethMismatch, "teeth differ from the required vertices");
  }
  return r;
}

}  // namespace tanglekit
