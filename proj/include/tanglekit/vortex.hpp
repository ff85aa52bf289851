#pragma once

#include <string>
#include <vector>

#include "tanglekit/graph.hpp"

namespace tanglekit {

// A graph with a linearly ordered society w_1 < ... < w_n (list order).
struct Vortex {
  Graph graph;
  std::vector<Vertex> society;

  int length() const noexcept { return static_cast<int>(society.size()); }
  VertexSet society_set() const { return make_set(society); }
  VertexSet inner() const { return set_difference(graph.all_vertices(), society_set()); }
  bool trivial() const { return inner().empty(); }
};

// Bags X_1..X_n of a path-decomposition with w_i ∈ X_i.
struct VortexDecomposition {
  std::vector<VertexSet> bags;
};

struct Linkage {
  std::vector<Path> paths;
  int adhesion = 0;
};

struct Comb {
  Path spine;
  std::vector<Path> teeth_paths;

  std::vector<Vertex> teeth() const;
};

enum class VortexViolationKind {
  SocietyNotInGraph,
  BagCountMismatch,
  BagVertexOutOfRange,
  SocietyVertexNotInBag,
  IntervalViolation,
  EdgeNotCovered,
  VertexNotCovered,
  SocietyIntersectionViolation,
  UnequalAdhesion,
  NoDisjointPathSystem,
  AdhesionIdentityViolation,
  LinkageInvalid,
};

std::string_view to_string(VortexViolationKind kind);

struct VortexViolation {
  VortexViolationKind kind;
  int bag = 0;  // 1-based bag index when the violation is local to a bag
  std::string message;
};

struct VortexReport {
  bool ok = true;
  std::vector<VortexViolation> violations;

  const VortexViolation* first() const { return violations.empty() ? nullptr : &violations.front(); }
  bool has(VortexViolationKind kind) const;
};

// Bag count, w_i membership, the interval property, and edge/vertex coverage.
// Every violation found is listed, in that order.
VortexReport check_vortex_decomposition(const Vortex& v, const VortexDecomposition& d);

struct LinkedReport : VortexReport {
  int q = 0;
  std::vector<VertexSet> adhesion_sets;  // Z_1..Z_{n-1}
  Linkage linkage;
};

// Linkedness with Z_i = (X_i ∩ X_{i+1}) \ Ω. On success the per-bag disjoint
// path systems are composed into q disjoint X_1-X_n paths.
LinkedReport check_linked(const Vortex& v, const VortexDecomposition& d);

// Validates a supplied linkage against a linked decomposition: q disjoint
// society-avoiding paths, each meeting every Z_i exactly once.
VortexReport check_linkage(const Vortex& v, const VortexDecomposition& d, const Linkage& linkage);

enum class CombViolationKind {
  InvalidSpine,
  InvalidToothPath,
  ToothPathOffSpine,
  ToothPathsIntersect,
  AttachmentOrder,
  TeethMismatch,
  TeethOrderMismatch,
};

std::string_view to_string(CombViolationKind kind);

struct CombViolation {
  CombViolationKind kind;
  std::string message;
};

struct CombReport {
  bool ok = true;
  std::vector<CombViolation> violations;
  const CombViolation* first() const { return violations.empty() ? nullptr : &violations.front(); }
};

struct CombOptions {
  bool allow_reversed = false;
};

CombReport comb_report(const Graph& g, const Comb& c, const std::vector<Vertex>& required_teeth,
                       const CombOptions& options = {});

inline bool check_comb(const Graph& g, const Comb& c, const std::vector<Vertex>& required_teeth,
                       const CombOptions& options = {}) {
  return comb_report(g, c, required_teeth, options).ok;
}

}  // namespace tanglekit
