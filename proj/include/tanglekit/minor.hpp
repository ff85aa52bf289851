#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tanglekit/graph.hpp"
#include "tanglekit/separation.hpp"
#include "tanglekit/tangle.hpp"

namespace tanglekit {

// Branch sets V_h in `host`, one per vertex h of `pattern`. Branch sets need
// not cover the host.
struct MinorModel {
  Graph host;
  Graph pattern;
  std::vector<VertexSet> branch_sets;

  const VertexSet& branch_set(Vertex h) const { return branch_sets.at(static_cast<std::size_t>(h)); }
};

enum class ModelViolationKind {
  WrongBranchSetCount,
  EmptyBranchSet,
  VertexOutOfRange,
  OverlappingBranchSets,
  DisconnectedBranchSet,
  MissingPatternEdge,
};

std::string_view to_string(ModelViolationKind kind);

struct ModelViolation {
  ModelViolationKind kind;
  std::string message;
};

struct ModelReport {
  bool valid = true;
  std::vector<ModelViolation> violations;
  const ModelViolation* first() const { return violations.empty() ? nullptr : &violations.front(); }
};

ModelReport validate_model(const MinorModel& m);

MinorModel identity_model(const Graph& g);

// ({h : V_h ∩ A ≠ ∅}, {h : V_h ∩ B ≠ ∅}). Throws InvalidModel / NotASeparation.
Separation induced_separation(const MinorModel& m, const Separation& s);

// Number of branch sets meeting `vertices`.
int branch_sets_meeting(const MinorModel& m, const VertexSet& vertices);

bool extended_membership(const MinorModel& m, const Tangle& pattern_tangle, const Separation& s);

// Predicate-backed extension of pattern_tangle to the host, same order.
Tangle extended_tangle(const MinorModel& m, const Tangle& pattern_tangle);

struct MinorSearchCaps {
  int max_host_vertices = 14;
  int max_pattern_vertices = 6;
};

// Exhaustive search; std::nullopt proves that no model exists.
std::optional<MinorModel> find_minor_model(const Graph& host, const Graph& pattern, const MinorSearchCaps& caps = {});

}  // namespace tanglekit
