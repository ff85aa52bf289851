#include "tanglekit/nearembed.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "tanglekit/grid.hpp"
#include "tanglekit/parallel.hpp"

namespace tanglekit {

// ---------------------------------------------------------------------------
// Rational

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v) {
  if (v > static_cast<Wide>(INT64_MAX) || v < static_cast<Wide>(INT64_MIN)) {
    throw Error(ErrorCode::Overflow, "value exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

Rational make_rational(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t d = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (d > 1) {
    num_ /= d;
    den_ /= d;
  }
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(Rational a, Rational b) {
  return make_rational(static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
                       static_cast<Wide>(a.den_) * b.den_);
}

Rational operator-(Rational a, Rational b) {
  return make_rational(static_cast<Wide>(a.num_) * b.den_ - static_cast<Wide>(b.num_) * a.den_,
                       static_cast<Wide>(a.den_) * b.den_);
}

Rational operator*(Rational a, Rational b) {
  return make_rational(static_cast<Wide>(a.num_) * b.num_, static_cast<Wide>(a.den_) * b.den_);
}

std::strong_ordering operator<=>(Rational a, Rational b) {
  const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Constants

namespace {

Wide binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Wide out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
    if (out > static_cast<Wide>(INT64_MAX)) throw Error(ErrorCode::Overflow, "binomial coefficient too large");
  }
  return out;
}

// 7 * (3g + (n2-1)alpha + 2(a+1)g + ask): the least n1 meeting the n1 condition.
Wide n1_floor(const ConstantsProfile& p) {
  return Wide{7} * (Wide{3} * p.g + static_cast<Wide>(p.n2 - 1) * p.alpha + Wide{2} * (p.a + 1) * p.g +
                    static_cast<Wide>(p.a) * p.s * p.k);
}

Wide r_square_bound(const ConstantsProfile& p) {
  return static_cast<Wide>(p.n1 + p.g) * (Wide{3} * p.alpha) * (Wide{3} * p.alpha) + p.n1;
}

}  // namespace

bool n1_condition(const ConstantsProfile& p, std::int64_t n1) { return static_cast<Wide>(n1) >= n1_floor(p); }

bool r_conditions(const ConstantsProfile& p, std::int64_t r) {
  return r >= p.theta && r > 3 * p.alpha && static_cast<Wide>(r) * r > r_square_bound(p);
}

ConstantsProfile compute_constants(std::int64_t a, std::int64_t s, std::int64_t k, std::int64_t alpha,
                                   std::int64_t theta, std::int64_t n2) {
  if (a < 1 || s < 1 || k < 1 || theta < 1 || n2 < 1) {
    throw Error(ErrorCode::InvalidArgument, "a, s, k, theta and n2 must be positive");
  }
  if (alpha <= 1) throw Error(ErrorCode::AlphaTooSmall, "alpha must exceed 1");
  ConstantsProfile p{a, s, k, alpha, theta, n2, 0, 0, 0};
  p.g = narrow((static_cast<Wide>(s) * k - 1) * binomial(alpha, a));
  p.n1 = narrow(std::max<Wide>(1, n1_floor(p)));
  const Wide bound = r_square_bound(p);
  Wide root = 0;
  {
    // floor(sqrt(bound)) by bisection on 128-bit values
    Wide lo = 0;
    Wide hi = Wide{1} << 62;
    while (lo < hi) {
      const Wide mid = (lo + hi + 1) / 2;
      if (mid * mid <= bound) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    root = lo;
  }
  p.r = narrow(std::max<Wide>({static_cast<Wide>(theta), Wide{3} * alpha + 1, root + 1}));
  return p;
}

// ---------------------------------------------------------------------------
// Certificate plumbing

VertexSet LargeVortexCert::vertices() const {
  VertexSet out;
  for (const VertexSet& bag : bags) out = set_union(out, bag);
  return out;
}

const LargeVortexCert& NearEmbeddingCertificate::large_vortex(int label) const {
  for (const auto& v : large_vortices) {
    if (v.label == label) return v;
  }
  throw Error(ErrorCode::IndexOutOfRange, "no large vortex " + std::to_string(label));
}

namespace {

std::vector<Vertex> local_index(const Subgraph& sub, int host_vertices) {
  std::vector<Vertex> to_local(static_cast<std::size_t>(host_vertices), -1);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) to_local[static_cast<std::size_t>(sub.to_parent[i])] = static_cast<Vertex>(i);
  return to_local;
}

Subgraph g0_subgraph(const NearEmbeddingCertificate& cert) {
  Subgraph sub;
  sub.to_parent = cert.g0_vertices;
  const int top = cert.g0_vertices.empty() ? 0 : cert.g0_vertices.back() + 1;
  const auto to_local = local_index(sub, top);
  std::vector<Edge> edges;
  for (const Edge& e : cert.g0_edges) {
    const auto in = [&](Vertex v) { return v >= 0 && v < top && to_local[static_cast<std::size_t>(v)] >= 0; };
    if (!in(e.u) || !in(e.v)) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "G0 edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " leaves g0-vertices");
    }
    edges.push_back(Edge{to_local[static_cast<std::size_t>(e.u)], to_local[static_cast<std::size_t>(e.v)]});
  }
  sub.graph = Graph(static_cast<int>(sub.to_parent.size()), edges);
  return sub;
}

std::string ids_text(const std::vector<Vertex>& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  return os.str();
}

struct VortexView {
  std::string name;
  int label;
  VertexSet vertices;
  std::vector<Vertex> society;
  std::set<Edge> edges;
};

// G_i: edges of G - A inside V(G_i) that do not belong to G0.
std::set<Edge> vortex_edges(const Graph& g, const VertexSet& apex, const std::set<Edge>& g0_edges,
                            const VertexSet& vertices) {
  std::set<Edge> out;
  for (const Edge& e : g.edges()) {
    if (set_contains(apex, e.u) || set_contains(apex, e.v)) continue;
    if (!set_contains(vertices, e.u) || !set_contains(vertices, e.v)) continue;
    if (g0_edges.count(e)) continue;
    out.insert(e);
  }
  return out;
}

std::set<Edge> normalized_g0_edges(const NearEmbeddingCertificate& cert) {
  std::set<Edge> out;
  for (const Edge& e : cert.g0_edges) out.insert(Edge{std::min(e.u, e.v), std::max(e.u, e.v)});
  return out;
}

struct LocalVortex {
  Subgraph map;
  Vortex vortex;
  VortexDecomposition decomposition;
};

LocalVortex localize(const Graph& g, const VertexSet& vertices, const std::set<Edge>& edges,
                     const std::vector<Vertex>& society, const std::vector<VertexSet>& bags) {
  LocalVortex lv;
  lv.map.to_parent = vertices;
  const auto to_local = local_index(lv.map, g.vertex_count());
  auto loc = [&to_local](Vertex v) { return to_local[static_cast<std::size_t>(v)]; };
  std::vector<Edge> local_edges;
  for (const Edge& e : edges) local_edges.push_back(Edge{loc(e.u), loc(e.v)});
  lv.map.graph = Graph(static_cast<int>(vertices.size()), local_edges);
  lv.vortex.graph = lv.map.graph;
  for (Vertex w : society) lv.vortex.society.push_back(loc(w));
  for (const VertexSet& bag : bags) {
    VertexSet local;
    for (Vertex v : bag) local.push_back(loc(v));
    lv.decomposition.bags.push_back(make_set(std::move(local)));
  }
  return lv;
}

Path lift_path(const Subgraph& map, const Path& p) {
  std::vector<Vertex> out;
  for (Vertex v : p.vertices()) out.push_back(map.parent_of(v));
  return Path(std::move(out));
}

}  // namespace

EmbeddedPart embedded_part(const NearEmbeddingCertificate& cert) {
  Subgraph g0 = g0_subgraph(cert);
  const auto to_local = local_index(g0, cert.g0_vertices.empty() ? 0 : cert.g0_vertices.back() + 1);
  std::vector<std::vector<Vertex>> rotation(g0.to_parent.size());
  for (std::size_t i = 0; i < g0.to_parent.size(); ++i) {
    const auto it = cert.rotation.find(g0.to_parent[i]);
    if (it == cert.rotation.end()) continue;
    for (Vertex w : it->second) {
      if (w < 0 || w >= static_cast<Vertex>(to_local.size()) || to_local[static_cast<std::size_t>(w)] < 0) {
        throw Error(ErrorCode::InvalidArgument,
                    "rotation at " + std::to_string(g0.to_parent[i]) + " names non-G0 vertex " + std::to_string(w));
      }
      rotation[i].push_back(to_local[static_cast<std::size_t>(w)]);
    }
  }
  RotationSystem rs(g0.graph, std::move(rotation));
  return EmbeddedPart{std::move(g0), std::move(rs)};
}

std::string_view to_string(CertViolationKind kind) {
  switch (kind) {
    case CertViolationKind::UnknownVertex: return "UnknownVertex";
    case CertViolationKind::ApexTooLarge: return "ApexTooLarge";
    case CertViolationKind::ApexInG0: return "ApexInG0";
    case CertViolationKind::ApexInVortex: return "ApexInVortex";
    case CertViolationKind::G0EdgeNotInGraph: return "G0EdgeNotInGraph";
    case CertViolationKind::RotationInvalid: return "RotationInvalid";
    case CertViolationKind::G0Disconnected: return "G0Disconnected";
    case CertViolationKind::DuplicateLabel: return "DuplicateLabel";
    case CertViolationKind::VertexNotCovered: return "VertexNotCovered";
    case CertViolationKind::EdgeNotCovered: return "EdgeNotCovered";
    case CertViolationKind::EdgeCoveredTwice: return "EdgeCoveredTwice";
    case CertViolationKind::SocietyMismatch: return "SocietyMismatch";
    case CertViolationKind::VortexOverlap: return "VortexOverlap";
    case CertViolationKind::TrivialVortex: return "TrivialVortex";
    case CertViolationKind::TooManyLargeVortices: return "TooManyLargeVortices";
    case CertViolationKind::LargeVorticesIntersect: return "LargeVorticesIntersect";
    case CertViolationKind::DecompositionInvalid: return "DecompositionInvalid";
    case CertViolationKind::NotLinked: return "NotLinked";
    case CertViolationKind::AdhesionTooLarge: return "AdhesionTooLarge";
    case CertViolationKind::LinkageInvalid: return "LinkageInvalid";
    case CertViolationKind::SmallVortexTooLong: return "SmallVortexTooLong";
    case CertViolationKind::CombMissing: return "CombMissing";
    case CertViolationKind::CombOutsideVortex: return "CombOutsideVortex";
    case CertViolationKind::CombInvalid: return "CombInvalid";
    case CertViolationKind::CombMeetsLinkage: return "CombMeetsLinkage";
    case CertViolationKind::DiscMissing: return "DiscMissing";
    case CertViolationKind::DiscInvalid: return "DiscInvalid";
    case CertViolationKind::SocietyNotOnFace: return "SocietyNotOnFace";
    case CertViolationKind::InterleavedSocieties: return "InterleavedSocieties";
  }
  return "?";
}

bool CertificateReport::has(CertViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(), [kind](const CertViolation& v) { return v.kind == kind; });
}

// ---------------------------------------------------------------------------
// validate_certificate

namespace {

class CertificateValidator {
 public:
  CertificateValidator(const Graph& g, const NearEmbeddingCertificate& cert, const ValidationOptions& options)
      : g_(g), cert_(cert), options_(options) {}

  CertificateReport run() {
    if (!ids_resolve()) return finish();
    apex_and_g0();
    collect_vortices();
    cover_and_overlap();
    large_vortices();
    small_vortices();
    discs();
    return finish();
  }

 private:
  void check(bool ok, CertViolationKind kind, const std::string& message) {
    ++report_.checks;
    if (!ok) report_.violations.push_back({kind, message});
  }

  CertificateReport finish() {
    report_.ok = report_.violations.empty();
    return report_;
  }

  bool ids_resolve() {
    bool ok = true;
    auto need = [&](Vertex v, const std::string& where) {
      if (!g_.has_vertex(v)) {
        check(false, CertViolationKind::UnknownVertex, where + " names vertex " + std::to_string(v));
        ok = false;
      }
    };
    for (Vertex v : cert_.apex) need(v, "apex");
    for (Vertex v : cert_.g0_vertices) need(v, "g0-vertices");
    for (const Edge& e : cert_.g0_edges) {
      need(e.u, "g0-edges");
      need(e.v, "g0-edges");
    }
    for (const auto& [v, cyc] : cert_.rotation) {
      need(v, "rotation");
      for (Vertex w : cyc) need(w, "rotation");
    }
    for (const auto& lv : cert_.large_vortices) {
      const std::string where = "largevortex " + std::to_string(lv.label);
      for (Vertex v : lv.society) need(v, where);
      for (const auto& bag : lv.bags) {
        for (Vertex v : bag) need(v, where);
      }
      for (const auto& p : lv.linkage) {
        for (Vertex v : p.vertices()) need(v, where);
      }
      if (lv.comb) {
        for (Vertex v : lv.comb->spine.vertices()) need(v, where);
        for (const auto& p : lv.comb->teeth_paths) {
          for (Vertex v : p.vertices()) need(v, where);
        }
      }
    }
    for (const auto& sv : cert_.small_vortices) {
      for (Vertex v : sv.vertices) need(v, "smallvortex " + std::to_string(sv.label));
      for (Vertex v : sv.society) need(v, "smallvortex " + std::to_string(sv.label));
    }
    return ok;
  }

  void apex_and_g0() {
    if (options_.alpha) {
      check(static_cast<std::int64_t>(cert_.apex.size()) <= *options_.alpha, CertViolationKind::ApexTooLarge,
            "|A| = " + std::to_string(cert_.apex.size()) + " exceeds alpha = " + std::to_string(*options_.alpha));
    }
    check(set_intersection(cert_.apex, cert_.g0_vertices).empty(), CertViolationKind::ApexInG0,
          "apex vertices lie in G0");
    for (const Edge& e : cert_.g0_edges) {
      const bool ends_in_g0 = set_contains(cert_.g0_vertices, e.u) && set_contains(cert_.g0_vertices, e.v);
      check(g_.adjacent(e.u, e.v) && ends_in_g0, CertViolationKind::G0EdgeNotInGraph,
            "G0 edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not an edge of G between G0 vertices");
    }
    g0_edges_ = normalized_g0_edges(cert_);
  }

  void collect_vortices() {
    std::set<int> labels;
    auto add = [&](std::string name, int label, VertexSet vertices, std::vector<Vertex> society) {
      check(labels.insert(label).second, CertViolationKind::DuplicateLabel, "vortex label " + std::to_string(label) + " reused");
      VortexView view{std::move(name), label, std::move(vertices), std::move(society), {}};
      view.edges = vortex_edges(g_, cert_.apex, g0_edges_, view.vertices);
      views_.push_back(std::move(view));
    };
    for (const auto& lv : cert_.large_vortices) {
      add("largevortex " + std::to_string(lv.label), lv.label, lv.vertices(), lv.society);
    }
    for (const auto& sv : cert_.small_vortices) {
      add("smallvortex " + std::to_string(sv.label), sv.label, make_set(sv.vertices), sv.society);
    }
  }

  void cover_and_overlap() {
    for (const auto& view : views_) {
      check(set_intersection(view.vertices, cert_.apex).empty(), CertViolationKind::ApexInVortex,
            view.name + " contains apex vertices");
    }
    for (const Edge& e : g_.edges()) {
      if (set_contains(cert_.apex, e.u) || set_contains(cert_.apex, e.v)) continue;
      int owners = g0_edges_.count(e) ? 1 : 0;
      for (const auto& view : views_) owners += view.edges.count(e) ? 1 : 0;
      const std::string name = std::to_string(e.u) + "-" + std::to_string(e.v);
      check(owners >= 1, CertViolationKind::EdgeNotCovered, "edge " + name + " of G - A lies in no part");
      check(owners <= 1, CertViolationKind::EdgeCoveredTwice, "edge " + name + " lies in more than one part");
    }
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (set_contains(cert_.apex, v)) continue;
      bool covered = set_contains(cert_.g0_vertices, v);
      for (const auto& view : views_) covered = covered || set_contains(view.vertices, v);
      check(covered, CertViolationKind::VertexNotCovered, "vertex " + std::to_string(v) + " lies in no part");
    }
    for (const auto& view : views_) {
      const VertexSet omega = make_set(view.society);
      check(omega.size() == view.society.size() && omega == set_intersection(view.vertices, cert_.g0_vertices),
            CertViolationKind::SocietyMismatch,
            view.name + ": society must list V(G_i) cap V(G_0) = {" +
                ids_text(set_intersection(view.vertices, cert_.g0_vertices)) + "} once each");
      check(!set_difference(view.vertices, omega).empty(), CertViolationKind::TrivialVortex,
            view.name + " has no inner vertices");
    }
    for (std::size_t i = 0; i < views_.size(); ++i) {
      for (std::size_t j = i + 1; j < views_.size(); ++j) {
        const VertexSet shared = set_intersection(views_[i].vertices, views_[j].vertices);
        check(is_subset(shared, cert_.g0_vertices), CertViolationKind::VortexOverlap,
              views_[i].name + " and " + views_[j].name + " share vertices outside G0");
      }
    }
  }

  void large_vortices() {
    const auto& large = cert_.large_vortices;
    if (options_.alpha) {
      check(static_cast<std::int64_t>(large.size()) <= *options_.alpha, CertViolationKind::TooManyLargeVortices,
            std::to_string(large.size()) + " large vortices exceed alpha");
    }
    for (std::size_t i = 0; i < large.size(); ++i) {
      for (std::size_t j = i + 1; j < large.size(); ++j) {
        check(set_intersection(views_[i].vertices, views_[j].vertices).empty(),
              CertViolationKind::LargeVorticesIntersect, views_[i].name + " and " + views_[j].name + " intersect");
      }
    }
    VertexSet small_vertices;
    std::set<Edge> small_edges;
    for (std::size_t i = large.size(); i < views_.size(); ++i) {
      small_vertices = set_union(small_vertices, views_[i].vertices);
      small_edges.insert(views_[i].edges.begin(), views_[i].edges.end());
    }
    for (std::size_t i = 0; i < large.size(); ++i) {
      const LargeVortexCert& lv = large[i];
      const VortexView& view = views_[i];
      const LocalVortex local = localize(g_, view.vertices, view.edges, lv.society, lv.bags);
      const LinkedReport linked = check_linked(local.vortex, local.decomposition);
      const VortexReport shape = check_vortex_decomposition(local.vortex, local.decomposition);
      check(shape.ok, CertViolationKind::DecompositionInvalid,
            view.name + ": " + (shape.ok ? "" : std::string(to_string(shape.first()->kind)) + " " + shape.first()->message));
      if (!shape.ok) continue;
      check(linked.ok, CertViolationKind::NotLinked,
            view.name + ": " + (linked.ok ? "" : std::string(to_string(linked.first()->kind)) + " " + linked.first()->message));
      if (!linked.ok) continue;
      if (options_.alpha) {
        check(linked.q <= *options_.alpha, CertViolationKind::AdhesionTooLarge,
              view.name + ": adhesion " + std::to_string(linked.q) + " exceeds alpha");
      }
      std::vector<Path> linkage;
      if (lv.linkage.empty()) {
        for (const Path& p : linked.linkage.paths) linkage.push_back(lift_path(local.map, p));
      } else {
        linkage = lv.linkage;
        Linkage supplied{{}, linked.q};
        const auto to_local = local_index(local.map, g_.vertex_count());
        bool inside = true;
        for (const Path& p : lv.linkage) {
          std::vector<Vertex> lp;
          for (Vertex v : p.vertices()) {
            inside = inside && to_local[static_cast<std::size_t>(v)] >= 0;
            lp.push_back(inside ? to_local[static_cast<std::size_t>(v)] : 0);
          }
          supplied.paths.emplace_back(std::move(lp));
        }
        const VortexReport lr = inside ? check_linkage(local.vortex, local.decomposition, supplied) : VortexReport{};
        check(inside && lr.ok, CertViolationKind::LinkageInvalid,
              view.name + ": " + (!inside ? "linkage leaves the vortex" : (lr.ok ? "" : lr.first()->message)));
      }
      comb(lv, view, linkage, small_vertices, small_edges);
    }
  }

  void comb(const LargeVortexCert& lv, const VortexView& view, const std::vector<Path>& linkage,
            const VertexSet& small_vertices, const std::set<Edge>& small_edges) {
    check(lv.comb.has_value(), CertViolationKind::CombMissing, view.name + " has no comb");
    if (!lv.comb) return;
    const Comb& c = *lv.comb;
    VertexSet comb_vertices = c.spine.vertex_set();
    for (const Path& p : c.teeth_paths) comb_vertices = set_union(comb_vertices, p.vertex_set());
    const VertexSet allowed = set_union(view.vertices, small_vertices);
    check(is_subset(comb_vertices, allowed), CertViolationKind::CombOutsideVortex,
          view.name + ": comb uses vertices {" + ids_text(set_difference(comb_vertices, allowed)) +
              "} outside the vortex and the small vortices");
    // The comb may only use edges of G_j and of the small vortices.
    std::vector<Edge> usable(view.edges.begin(), view.edges.end());
    usable.insert(usable.end(), small_edges.begin(), small_edges.end());
    const Graph host(g_.vertex_count(), usable);
    const CombReport cr = comb_report(host, c, lv.society, options_.comb);
    check(cr.ok, CertViolationKind::CombInvalid,
          view.name + ": " + (cr.ok ? "" : std::string(to_string(cr.first()->kind)) + " " + cr.first()->message));
    VertexSet linkage_vertices;
    for (const Path& p : linkage) linkage_vertices = set_union(linkage_vertices, p.vertex_set());
    check(set_intersection(comb_vertices, linkage_vertices).empty(), CertViolationKind::CombMeetsLinkage,
          view.name + ": comb meets the linkage in {" + ids_text(set_intersection(comb_vertices, linkage_vertices)) + "}");
  }

  void small_vortices() {
    for (const auto& sv : cert_.small_vortices) {
      check(sv.society.size() <= 3, CertViolationKind::SmallVortexTooLong,
            "smallvortex " + std::to_string(sv.label) + " has length " + std::to_string(sv.society.size()) + " > 3");
    }
  }

  void discs() {
    std::optional<EmbeddedPart> part;
    try {
      part.emplace(embedded_part(cert_));
    } catch (const Error& e) {
      check(false, CertViolationKind::RotationInvalid, e.what());
      return;
    }
    const bool connected = is_connected(part->g0.graph);
    check(connected, CertViolationKind::G0Disconnected, "G0 is not connected");
    if (!connected) return;
    const FaceSet faces = trace_faces(part->rotation);

    std::map<int, std::vector<const DiscAssignment*>> by_label;
    for (const auto& d : cert_.discs) by_label[d.vortex_label].push_back(&d);
    for (const auto& d : cert_.discs) {
      const bool known = std::any_of(views_.begin(), views_.end(), [&d](const VortexView& v) { return v.label == d.vortex_label; });
      check(known, CertViolationKind::DiscInvalid, "disc names unknown vortex " + std::to_string(d.vortex_label));
    }
    // face index -> (vortex name, matched positions on that face)
    std::map<int, std::vector<std::pair<std::string, std::vector<int>>>> on_face;
    for (const auto& view : views_) {
      const auto it = by_label.find(view.label);
      const std::size_t count = it == by_label.end() ? 0 : it->second.size();
      check(count == 1, CertViolationKind::DiscMissing,
            view.name + " has " + std::to_string(count) + " disc assignments, expected 1");
      if (count != 1) continue;
      const DiscAssignment& d = *it->second.front();
      const bool face_ok = d.face >= 0 && d.face < faces.count();
      check(face_ok, CertViolationKind::DiscInvalid, view.name + ": face " + std::to_string(d.face) + " does not exist");
      if (!face_ok) continue;
      const auto& darts = faces.faces[static_cast<std::size_t>(d.face)];
      std::vector<Vertex> walk;
      for (const Dart& dart : darts) walk.push_back(part->g0.parent_of(dart.tail));
      std::vector<int> starts;
      if (d.start) {
        int found = -1;
        for (std::size_t i = 0; i < darts.size(); ++i) {
          if (part->g0.parent_of(darts[i].tail) == d.start->tail && part->g0.parent_of(darts[i].head) == d.start->head) {
            found = static_cast<int>(i);
          }
        }
        check(found >= 0, CertViolationKind::DiscInvalid,
              view.name + ": start dart " + std::to_string(d.start->tail) + ":" + std::to_string(d.start->head) +
                  " is not on face " + std::to_string(d.face));
        if (found < 0) continue;
        starts.push_back(found);
      } else {
        for (int i = 0; i < static_cast<int>(walk.size()); ++i) starts.push_back(i);
      }
      std::optional<std::vector<int>> matched;
      for (int start : starts) {
        matched = match_society(walk, start, d.forward, view.society);
        if (matched) break;
      }
      check(matched.has_value(), CertViolationKind::SocietyNotOnFace,
            view.name + ": society does not appear in order along face " + std::to_string(d.face));
      if (matched) on_face[d.face].emplace_back(view.name, *matched);
    }
    for (const auto& [face, entries] : on_face) {
      for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
          check(!interleaved(entries[i].second, entries[j].second), CertViolationKind::InterleavedSocieties,
                entries[i].first + " and " + entries[j].first + " interleave on face " + std::to_string(face));
        }
      }
    }
  }

  // Positions (in walk indexing) of a greedy in-order match of `society`
  // along the cyclic walk read from `start` in the given direction.
  static std::optional<std::vector<int>> match_society(const std::vector<Vertex>& walk, int start, bool forward,
                                                       const std::vector<Vertex>& society) {
    const int n = static_cast<int>(walk.size());
    std::vector<int> positions;
    std::size_t next = 0;
    for (int step = 0; step < n && next < society.size(); ++step) {
      const int idx = forward ? (start + step) % n : ((start - step) % n + n) % n;
      if (walk[static_cast<std::size_t>(idx)] == society[next]) {
        positions.push_back(idx);
        ++next;
      }
    }
    if (next != society.size()) return std::nullopt;
    return positions;
  }

  static bool interleaved(std::vector<int> first, const std::vector<int>& second) {
    std::sort(first.begin(), first.end());
    first.erase(std::unique(first.begin(), first.end()), first.end());
    if (first.size() < 2) return false;
    int gap = -1;
    for (int p : second) {
      if (std::binary_search(first.begin(), first.end(), p)) continue;
      // Gap k lies between first[k] and first[k+1] (cyclically).
      const auto it = std::upper_bound(first.begin(), first.end(), p);
      int k = static_cast<int>(it - first.begin()) - 1;
      if (k < 0) k = static_cast<int>(first.size()) - 1;
      if (gap >= 0 && gap != k) return true;
      gap = k;
    }
    return false;
  }

  const Graph& g_;
  const NearEmbeddingCertificate& cert_;
  const ValidationOptions& options_;
  CertificateReport report_;
  std::set<Edge> g0_edges_;
  std::vector<VortexView> views_;  // large vortices first, then small ones
};

}  // namespace

CertificateReport validate_certificate(const Graph& g, const NearEmbeddingCertificate& cert,
                                       const ValidationOptions& options) {
  return CertificateValidator(g, cert, options).run();
}

CertificateReport validate_certificate(const Graph& g, const NearEmbeddingCertificate& cert,
                                       const ConstantsProfile& profile) {
  ValidationOptions options;
  options.alpha = profile.alpha;
  return validate_certificate(g, cert, options);
}

// ---------------------------------------------------------------------------
// respects_check

RespectsReport respects_check(const Graph& g, const NearEmbeddingCertificate& cert, const Tangle& t,
                              const RespectsOptions& options) {
  const VertexSet apex = make_set(cert.apex);
  TruncatedTangle truncated = truncate(g, t, apex);

  std::vector<std::pair<std::string, VertexSet>> containers;
  for (const auto& sv : cert.small_vortices) {
    containers.emplace_back("smallvortex " + std::to_string(sv.label), make_set(sv.vertices));
  }
  for (const auto& lv : cert.large_vortices) {
    for (std::size_t i = 0; i < lv.bags.size(); ++i) {
      containers.emplace_back("bag " + std::to_string(i + 1) + " of largevortex " + std::to_string(lv.label),
                              make_set(lv.bags[i]));
    }
  }

  int top = truncated.tangle.order() - 1;
  if (options.max_order) top = std::min(top, *options.max_order);

  // Candidate members as separations of G - A in host ids.
  std::vector<Separation> candidates;
  bool pre_filtered = false;
  const int remainder_size = truncated.remainder.graph.vertex_count();
  if (remainder_size > options.limits.max_vertices && t.is_materialized()) {
    for (const Separation& s : t.members()) {
      if (!is_subset(apex, s.separator())) continue;
      const Separation reduced(set_difference(s.side_a(), apex), set_difference(s.side_b(), apex));
      if (reduced.order() <= top) candidates.push_back(reduced);
    }
    pre_filtered = true;
  } else {
    for (const Separation& s : enumerate_separations(truncated.remainder.graph, top, options.limits)) {
      candidates.emplace_back(truncated.remainder.lift(s.side_a()), truncated.remainder.lift(s.side_b()));
    }
  }

  struct Hit {
    std::size_t index;
    std::string container;
  };
  const int threads = std::max(options.limits.threads, 1);
  std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(threads));
  std::vector<std::vector<Hit>> hits(static_cast<std::size_t>(threads));
  parallel_slices(candidates.size(), threads, [&](std::size_t begin, std::size_t end, std::size_t w) {
    for (std::size_t i = begin; i < end; ++i) {
      const Separation& s = candidates[i];
      const bool member =
          pre_filtered || t.contains(Separation(set_union(s.side_a(), apex), set_union(s.side_b(), apex)));
      if (!member) continue;
      members[w].push_back(i);
      for (const auto& [name, vertices] : containers) {
        if (is_subset(s.side_b(), vertices)) hits[w].push_back(Hit{i, name});
      }
    }
  });

  RespectsReport report;
  report.separations_checked = static_cast<int>(candidates.size());
  for (const auto& m : members) report.members += static_cast<int>(m.size());
  for (const auto& worker_hits : hits) {
    for (const Hit& h : worker_hits) {
      const Separation& s = candidates[h.index];
      report.violations.push_back(
          RespectsViolation{Separation(set_union(s.side_a(), apex), set_union(s.side_b(), apex)), h.container});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

// ---------------------------------------------------------------------------
// Essential vertices, wideness, Euler machinery

namespace {

VertexSet society_vertices(const NearEmbeddingCertificate& cert) {
  std::vector<Vertex> all;
  for (const auto& lv : cert.large_vortices) all.insert(all.end(), lv.society.begin(), lv.society.end());
  for (const auto& sv : cert.small_vortices) all.insert(all.end(), sv.society.begin(), sv.society.end());
  return make_set(std::move(all));
}

}  // namespace

VertexSet essential_vertices(const NearEmbeddingCertificate& cert) {
  const auto edges = normalized_g0_edges(cert);
  std::map<Vertex, int> degree;
  for (const Edge& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  VertexSet out;
  for (Vertex v : society_vertices(cert)) {
    if (degree[v] < kEssentialDegree) out.push_back(v);
  }
  return out;
}

VertexSet essential_vertices(const Graph& g, const NearEmbeddingCertificate& cert, NeighborCount mode) {
  if (mode == NeighborCount::G0Edges) return essential_vertices(cert);
  VertexSet out;
  for (Vertex v : society_vertices(cert)) {
    if (!g.has_vertex(v)) throw Error(ErrorCode::VertexOutOfRange, "society vertex " + std::to_string(v));
    const int inside = static_cast<int>(set_intersection(g.neighbors(v), cert.g0_vertices).size());
    if (inside < kEssentialDegree) out.push_back(v);
  }
  return out;
}

bool is_m_wide(const NearEmbeddingCertificate& cert, int vortex_label, int m) {
  const LargeVortexCert& lv = cert.large_vortex(vortex_label);
  const VertexSet essential = essential_vertices(cert);
  const auto count = std::count_if(lv.society.begin(), lv.society.end(),
                                   [&essential](Vertex v) { return set_contains(essential, v); });
  return count >= m;
}

const InequalityLine& EulerReport::line(const std::string& name) const {
  for (const auto& l : lines) {
    if (l.name == name) return l;
  }
  throw Error(ErrorCode::InvalidArgument, "no line " + name);
}

namespace {

InequalityLine compare(std::string name, Rational lhs, std::string relation, Rational rhs) {
  bool holds = false;
  if (relation == "=") holds = lhs == rhs;
  if (relation == "<") holds = lhs < rhs;
  if (relation == "<=") holds = lhs <= rhs;
  if (relation == ">") holds = lhs > rhs;
  if (relation == ">=") holds = lhs >= rhs;
  return InequalityLine{std::move(name), lhs, std::move(relation), rhs, holds};
}

}  // namespace

EulerReport euler_report(const NearEmbeddingCertificate& cert, const ConstantsProfile& profile) {
  const EmbeddedPart part = embedded_part(cert);
  const FaceSet faces = trace_faces(part.rotation);
  EulerReport r;
  r.vertices = part.g0.graph.vertex_count();
  r.edges = part.g0.graph.edge_count();
  r.faces = faces.count();
  r.euler_genus = 2 - r.vertices + r.edges - r.faces;

  const VertexSet society = set_intersection(society_vertices(cert), cert.g0_vertices);
  const VertexSet essential = set_intersection(essential_vertices(cert), cert.g0_vertices);
  r.x = static_cast<int>(essential.size());
  r.y = static_cast<int>(society.size() - essential.size());
  r.z = r.vertices - static_cast<int>(society.size());

  const Rational n0(r.vertices);
  const Rational e0(r.edges);
  const Rational l(r.faces);
  const Rational eps(r.euler_genus);
  const Rational ask(profile.a * profile.s * profile.k);
  const Rational a1(2 * (profile.a + 1));
  const Rational g(profile.g);
  const Rational x(r.x);
  const Rational y(r.y);
  const Rational z(r.z);

  r.lines.push_back(compare("euler-formula", n0 - e0 + l, "=", Rational(2) - eps));
  r.lines.push_back(compare("partition", x + y + z, "=", n0));
  r.lines.push_back(compare("face-bound", Rational(3) * l, "<=", Rational(2) * e0));
  r.lines.push_back(compare("genus-bound", eps, "<", ask));
  r.lines.push_back(compare("genus-slack", n0 + ask, ">", n0 + eps));
  r.lines.push_back(compare("face-slack", Rational(2) + e0 - l, ">", Rational(1, 3) * e0));
  r.lines.push_back(compare("edges-upper", n0 + ask, ">", Rational(1, 3) * e0));
  const Rational middle = y + a1 * (z - g);
  r.lines.push_back(compare("degree-sum", Rational(2, 7) * e0, ">=", middle));
  r.lines.push_back(compare("degree-floor", middle, ">=", n0 - x - a1 * g));
  r.lines.push_back(compare("edges-lower", Rational(2, 7) * e0, ">=", n0 - x - a1 * g));
  r.lines.push_back(compare("combined", Rational(6, 7) * (n0 + ask), ">", n0 - x - a1 * g));
  const Rational floor_x = Rational(1, 7) * n0 - a1 * g - ask;
  r.lines.push_back(compare("conclusion", x, ">", floor_x));
  r.lines.push_back(compare("width-target", floor_x, ">=", Rational(3) * g + Rational(profile.n2 - 1) * Rational(profile.alpha)));
  return r;
}

CountBounds count_bounds(const Graph& g, const NearEmbeddingCertificate& cert,
                                     const ConstantsProfile& profile) {
  CountBounds m;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (static_cast<std::int64_t>(set_intersection(g.neighbors(v), cert.apex).size()) >= profile.a) {
      ++m.vertices_with_many_apex_neighbours;
    }
  }
  m.small_vortices = static_cast<int>(cert.small_vortices.size());
  m.bound = profile.g;
  m.apex_bound_holds = m.vertices_with_many_apex_neighbours <= profile.g;
  m.small_vortex_bound_holds = m.small_vortices <= profile.g;
  return m;
}

// ---------------------------------------------------------------------------
// branch_count_check

BranchCountReport branch_count_check(const Graph& g, const NearEmbeddingCertificate& cert, const MinorModel& model,
                                     const ConstantsProfile& profile) {
  const ModelReport mr = validate_model(model);
  if (!mr.valid) throw Error(ErrorCode::InvalidModel, mr.first()->message);
  if (!(model.host == g)) throw Error(ErrorCode::InvalidModel, "model host differs from the graph");
  const int r = grid_size_of(model.pattern);
  if (r == 0) throw Error(ErrorCode::InvalidModel, "model pattern is not a grid");
  const GridGraph grid = make_grid(r);
  const Tangle natural = natural_tangle(grid);

  const VertexSet apex = make_set(cert.apex);
  const VertexSet rest = set_difference(g.all_vertices(), apex);
  BranchCountReport report;
  auto measure = [&](std::string name, const VertexSet& part) {
    VertexSet boundary;
    for (Vertex v : part) {
      for (Vertex w : g.neighbors(v)) {
        if (!set_contains(part, w) && !set_contains(apex, w)) {
          boundary.push_back(v);
          break;
        }
      }
    }
    boundary = make_set(std::move(boundary));
    const VertexSet small = set_union(part, apex);
    const VertexSet large = set_union(set_union(set_difference(rest, part), boundary), apex);
    PartCount pc;
    pc.part = std::move(name);
    pc.separation = Separation(small, large);
    pc.order = pc.separation.order();
    pc.branch_sets = branch_sets_meeting(model, small);
    pc.member = extended_membership(model, natural, pc.separation);
    pc.holds = pc.branch_sets <= pc.order * pc.order;
    report.ok = report.ok && pc.holds;
    report.parts.push_back(std::move(pc));
  };
  for (const auto& sv : cert.small_vortices) measure("small " + std::to_string(sv.label), make_set(sv.vertices));
  for (const auto& lv : cert.large_vortices) {
    for (std::size_t i = 0; i < lv.bags.size(); ++i) {
      measure("bag " + std::to_string(lv.label) + "." + std::to_string(i + 1), make_set(lv.bags[i]));
    }
  }
  const Rational three_alpha(3 * profile.alpha);
  report.aggregate_lhs = Rational(profile.n1 + profile.g) * three_alpha * three_alpha + Rational(profile.n1);
  report.aggregate_rhs = Rational(profile.r) * Rational(profile.r);
  report.aggregate_holds = report.aggregate_lhs < report.aggregate_rhs;
  report.ok = report.ok && report.aggregate_holds;
  return report;
}

// ---------------------------------------------------------------------------
// check_hypotheses

HypothesisReport check_hypotheses(const Graph& g, int a) {
  if (g.vertex_count() < 2) throw Error(ErrorCode::TooSmall, "connectivity needs at least two vertices");
  if (a < 1) throw Error(ErrorCode::InvalidArgument, "a must be positive");
  HypothesisReport r;
  r.kappa = vertex_connectivity(g);
  r.delta = min_degree(g);
  r.kappa_threshold = 3 * a + 2;
  r.delta_threshold = Rational(31 * (a + 1), 2) - Rational(3);
  r.kappa_ok = r.kappa >= r.kappa_threshold;
  r.delta_ok = Rational(r.delta) >= r.delta_threshold;
  return r;
}

}  // namespace tanglekit
