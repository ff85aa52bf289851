#include "tanglekit/fixtures.hpp"

#include <algorithm>

namespace tanglekit::fixtures {

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, edges);
}

RotationSystem planar_grid_rotation(const GridGraph& w) {
  std::vector<std::pair<double, double>> points;
  for (Vertex v = 0; v < w.graph().vertex_count(); ++v) {
    const GridCoord c = w.coord(v);
    points.emplace_back(c.column, -c.row);
  }
  return rotation_from_drawing(w.graph(), points);
}

RotationSystem k5_rotation() {
  const Graph k5 = complete_graph(5);
  std::vector<std::vector<Vertex>> rot(5);
  for (Vertex v = 0; v < 5; ++v) {
    for (int step : {1, 2, 4, 3}) rot[static_cast<std::size_t>(v)].push_back((v + step) % 5);
  }
  return RotationSystem(k5, rot);
}

PendantGrid pendant_w3() {
  PendantGrid p;
  std::vector<Edge> edges = p.grid.graph().edges();
  edges.push_back({p.corner, p.pendant});
  p.host = Graph(10, edges);
  p.model = MinorModel{p.host, p.grid.graph(), {}};
  for (Vertex v = 0; v < 9; ++v) p.model.branch_sets.push_back({v});
  return p;
}

std::vector<HostModel> host_model_fixtures() {
  std::vector<HostModel> out;
  out.push_back({"pendant-w3", pendant_w3().model});

  // path 0-1-2 onto an edge ab: V_a = {0,1}, V_b = {2}
  out.push_back({"path-edge", MinorModel{path_graph(3), Graph(2, {{0, 1}}), {{0, 1}, {2}}}});

  // W_3 onto W_2
  const GridGraph w3 = make_grid(3);
  out.push_back({"w3-w2", MinorModel{w3.graph(), make_grid(2).graph(), {{0}, {1, 2}, {3, 6}, {4, 5, 7, 8}}}});

  // W_4 onto W_2 by contracting the four 2x2 quadrants
  const GridGraph w4 = make_grid(4);
  MinorModel quad{w4.graph(), make_grid(2).graph(), std::vector<VertexSet>(4)};
  for (Vertex v = 0; v < 16; ++v) {
    const GridCoord c = w4.coord(v);
    quad.branch_sets[static_cast<std::size_t>((c.row - 1) / 2 * 2 + (c.column - 1) / 2)].push_back(v);
  }
  out.push_back({"w4-w2", quad});

  // hexagon with chords 0-3 and 1-4 onto K4
  out.push_back({"hexagon-k4", MinorModel{Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}, {1, 4}}),
                                          complete_graph(4),
                                          {{0}, {1, 2}, {3}, {4, 5}}}});
  return out;
}

namespace {

constexpr Vertex u(int i) { return i - 1; }
constexpr Vertex w(int i) { return i + 3; }

Graph caterpillar_graph(bool with_u2u3) {
  std::vector<Edge> edges{{u(1), u(2)}, {u(3), u(4)}};
  if (with_u2u3) edges.push_back({u(2), u(3)});
  for (int i = 1; i <= 4; ++i) edges.push_back({u(i), w(i)});
  return Graph(8, edges);
}

}  // namespace

Caterpillar caterpillar() {
  Caterpillar c;
  c.vortex = Vortex{caterpillar_graph(true), {w(1), w(2), w(3), w(4)}};
  c.decomposition.bags.push_back(make_set({w(1), u(1)}));
  for (int i = 2; i <= 4; ++i) c.decomposition.bags.push_back(make_set({w(i - 1), w(i), u(i - 1), u(i)}));
  c.comb.spine = Path({u(1), u(2), u(3), u(4)});
  for (int i = 1; i <= 4; ++i) c.comb.teeth_paths.push_back(Path({u(i), w(i)}));
  return c;
}

Caterpillar caterpillar_without_edge_u2u3() {
  Caterpillar c = caterpillar();
  c.vortex.graph = caterpillar_graph(false);
  return c;
}

Caterpillar caterpillar_missing_w2_in_x2() {
  Caterpillar c = caterpillar();
  c.decomposition.bags[1] = set_difference(c.decomposition.bags[1], {w(2)});
  return c;
}

Caterpillar caterpillar_bags_permuted() {
  Caterpillar c = caterpillar();
  std::swap(c.decomposition.bags[2], c.decomposition.bags[3]);
  return c;
}

Caterpillar caterpillar_w3_in_x1() {
  Caterpillar c = caterpillar();
  c.decomposition.bags[0] = set_union(c.decomposition.bags[0], {w(3)});
  return c;
}

Comb caterpillar_comb_reversed() {
  Comb comb;
  comb.spine = Path({u(4), u(3), u(2), u(1)});
  for (int i = 4; i >= 1; --i) comb.teeth_paths.push_back(Path({u(i), w(i)}));
  return comb;
}

std::map<Vertex, std::vector<Vertex>> rotation_map(const RotationSystem& rs, const std::vector<Vertex>& to_parent) {
  std::map<Vertex, std::vector<Vertex>> out;
  for (Vertex v = 0; v < rs.graph().vertex_count(); ++v) {
    std::vector<Vertex> cyc;
    for (Vertex x : rs.rotation(v)) cyc.push_back(to_parent[static_cast<std::size_t>(x)]);
    out[to_parent[static_cast<std::size_t>(v)]] = cyc;
  }
  return out;
}

DiscAssignment find_disc(const NearEmbeddingCertificate& cert, int label, const std::vector<Vertex>& society) {
  const EmbeddedPart part = embedded_part(cert);
  const FaceSet faces = trace_faces(part.rotation);
  for (int f = 0; f < faces.count(); ++f) {
    std::vector<Vertex> walk;
    for (Vertex x : faces.boundary(f)) walk.push_back(part.g0.parent_of(x));
    const int n = static_cast<int>(walk.size());
    for (bool forward : {true, false}) {
      for (int start = 0; start < n; ++start) {
        std::size_t next = 0;
        for (int step = 0; step < n && next < society.size(); ++step) {
          const int idx = forward ? (start + step) % n : ((start - step) % n + n) % n;
          if (walk[static_cast<std::size_t>(idx)] == society[next]) ++next;
        }
        if (next == society.size()) return DiscAssignment{label, f, std::nullopt, forward};
      }
    }
  }
  throw Error(ErrorCode::InvalidArgument, "no face carries the society of vortex " + std::to_string(label));
}

namespace {

// G_0 = W_3 with its planar rotation, A empty.
NearEmbeddingCertificate grid_g0(const GridGraph& grid) {
  NearEmbeddingCertificate cert;
  cert.g0_vertices = grid.graph().all_vertices();
  cert.g0_edges = grid.graph().edges();
  cert.rotation = rotation_map(planar_grid_rotation(grid), grid.graph().all_vertices());
  return cert;
}

}  // namespace

Composite composite() {
  Composite c;
  std::vector<Edge> edges = c.grid.graph().edges();
  // large vortex: inner path 9-10-11-12 hanging off society 0,1,2,5
  const std::vector<Edge> large{{9, 10}, {10, 11}, {11, 12}, {0, 9}, {1, 10}, {2, 11}, {5, 12},
                                {0, 13}, {1, 13}, {1, 14}, {2, 14}, {2, 15}, {5, 15}};
  // small vortex: 16 joined to 3, 4, 7
  const std::vector<Edge> small{{3, 16}, {4, 16}, {7, 16}};
  edges.insert(edges.end(), large.begin(), large.end());
  edges.insert(edges.end(), small.begin(), small.end());
  c.graph = Graph(17, edges);

  c.cert = grid_g0(c.grid);
  LargeVortexCert lv;
  lv.label = 1;
  lv.society = {0, 1, 2, 5};
  lv.bags = {{0, 9}, {0, 1, 9, 10, 13}, {1, 2, 10, 11, 14}, {2, 5, 11, 12, 15}};
  lv.linkage = {Path({9, 10, 11})};
  lv.comb = Comb{Path({0, 13, 1, 14, 2, 15, 5}), {Path({0}), Path({1}), Path({2}), Path({5})}};
  c.cert.large_vortices.push_back(lv);
  c.cert.small_vortices.push_back(SmallVortexCert{2, {3, 4, 7, 16}, {3, 4, 7}});
  c.cert.discs.push_back(find_disc(c.cert, 1, lv.society));
  c.cert.discs.push_back(find_disc(c.cert, 2, {3, 4, 7}));

  c.model = MinorModel{c.graph, c.grid.graph(), {}};
  for (Vertex v = 0; v < 9; ++v) c.model.branch_sets.push_back({v});
  return c;
}

NearEmbeddingCertificate swollen_small_vortex(const Composite& c) {
  NearEmbeddingCertificate cert = c.cert;
  cert.small_vortices.front().vertices = set_difference(c.graph.all_vertices(), {9});
  return cert;
}

Trivial trivial_certificate() {
  Trivial t;
  t.graph = t.grid.graph();
  t.cert = grid_g0(t.grid);
  return t;
}

SmallTooLong small_vortex_too_long() {
  const GridGraph grid = make_grid(3);
  std::vector<Edge> edges = grid.graph().edges();
  for (Vertex v : {0, 1, 2, 5}) edges.push_back({v, 9});
  SmallTooLong s;
  s.graph = Graph(10, edges);
  s.cert = grid_g0(grid);
  s.cert.small_vortices.push_back(SmallVortexCert{1, {0, 1, 2, 5, 9}, {0, 1, 2, 5}});
  s.cert.discs.push_back(find_disc(s.cert, 1, {0, 1, 2, 5}));
  return s;
}

NearEmbeddingCertificate dense_society() {
  const Graph k8 = complete_graph(8);
  NearEmbeddingCertificate cert;
  cert.g0_vertices = k8.all_vertices();
  cert.g0_edges = k8.edges();
  for (Vertex v = 0; v < 8; ++v) cert.rotation[v] = k8.neighbors(v);
  LargeVortexCert lv;
  lv.label = 1;
  lv.society = {0, 1, 2, 3, 4, 5, 6};
  cert.large_vortices.push_back(lv);
  return cert;
}

}  // namespace tanglekit::fixtures
