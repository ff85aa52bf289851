#pragma once

#include <vector>

#include "tanglekit/graph.hpp"
#include "tanglekit/grid.hpp"
#include "tanglekit/minor.hpp"
#include "tanglekit/nearembed.hpp"
#include "tanglekit/surface.hpp"
#include "tanglekit/vortex.hpp"

// Hand-built instances shared by the tests, the acceptance run and the CLI's
// verify-all. Each one is small enough to check by hand.
namespace tanglekit::fixtures {

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

// Straight-line drawing of W_r with (i, j) at (j, -i).
RotationSystem planar_grid_rotation(const GridGraph& w);

// K5 on Z_5 with rotation i+1, i+2, i+4, i+3 at vertex i (a torus embedding).
RotationSystem k5_rotation();

// W_3 plus a pendant vertex 9 attached to the corner 0 = (1,1); identity
// model of W_3 on 0..8.
struct PendantGrid {
  GridGraph grid{3};
  Graph host;
  MinorModel model;
  Vertex pendant = 9;
  Vertex corner = 0;
};
PendantGrid pendant_w3();

// Host/model pairs for the induced-separation property.
struct HostModel {
  const char* name;
  MinorModel model;
};
std::vector<HostModel> host_model_fixtures();

// u_1..u_4 = 0..3 on a path, w_i = 4..7 pendant at u_i; society w_1..w_4.
// X_1 = {w_1, u_1}, X_i = {w_{i-1}, w_i, u_{i-1}, u_i}.
struct Caterpillar {
  Vortex vortex;
  VortexDecomposition decomposition;
  Comb comb;  // spine u_1..u_4, teeth paths u_i w_i
};
Caterpillar caterpillar();
Caterpillar caterpillar_without_edge_u2u3();
Caterpillar caterpillar_missing_w2_in_x2();
Caterpillar caterpillar_bags_permuted();    // X_1, X_2, X_4, X_3
Caterpillar caterpillar_w3_in_x1();
// Spine u_4..u_1: a valid comb whose teeth come out as w_4, w_3, w_2, w_1.
Comb caterpillar_comb_reversed();

// Near-embedding of a 17-vertex graph: planar W_3 as G_0 (ids 0..8), a large
// vortex with society 0,1,2,5 on the outer face (inner path 9-10-11-12 and
// connectors 13, 14, 15 carrying the comb spine), and a small vortex
// {3,4,7,16} with society 3,4,7 on the face 3-4-7-6. A is empty.
struct Composite {
  GridGraph grid{3};
  Graph graph;
  NearEmbeddingCertificate cert;
  MinorModel model;  // identity model of W_3 on 0..8
};
Composite composite();
// Small vortex swollen to every vertex but 9: it now swallows the large side
// of ({0,9,10}, V \ {9}).
NearEmbeddingCertificate swollen_small_vortex(const Composite& c);

// W_3 with nothing but G_0.
struct Trivial {
  GridGraph grid{3};
  Graph graph;
  NearEmbeddingCertificate cert;
};
Trivial trivial_certificate();

// W_3 plus vertex 9 adjacent to 0, 1, 2, 5 as one small vortex of length 4.
struct SmallTooLong {
  Graph graph;
  NearEmbeddingCertificate cert;
};
SmallTooLong small_vortex_too_long();

// G_0 = K_8 (every vertex of degree 7) with seven society vertices 0..6;
// the degree-sum line of the Euler report fails for a = s = k = 1.
NearEmbeddingCertificate dense_society();

// Rotation (as certificate map) and disc assignment helpers.
std::map<Vertex, std::vector<Vertex>> rotation_map(const RotationSystem& rs, const std::vector<Vertex>& to_parent);
// First face (and direction) whose boundary carries `society` in order.
DiscAssignment find_disc(const NearEmbeddingCertificate& cert, int label, const std::vector<Vertex>& society);

}  // namespace tanglekit::fixtures
