#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tanglekit/graph.hpp"
#include "tanglekit/grid.hpp"
#include "tanglekit/separation.hpp"

namespace tanglekit {

using MembershipPredicate = std::function<bool(const Separation&)>;

// A tangle of order `order` on `ground`: a set of oriented separations, each
// of order < `order`, given either explicitly or by a predicate. Nothing is
// assumed about consistency; check_axioms verifies it.
class Tangle {
 public:
  static Tangle from_members(Graph ground, int order, std::vector<Separation> members);
  static Tangle from_predicate(Graph ground, int order, MembershipPredicate predicate);

  const Graph& ground() const noexcept { return *ground_; }
  int order() const noexcept { return order_; }

  bool contains(const Separation& s) const;

  // Evaluates the predicate over every separation of order < order() (and
  // <= max_order when given) and caches the members.
  void materialize(const EnumerationLimits& limits = {}, std::optional<int> max_order = std::nullopt);
  bool is_materialized() const noexcept { return materialized_.has_value(); }
  // Highest order covered by the cached member list.
  int materialized_order() const noexcept { return materialized_order_; }
  const std::vector<Separation>& members() const;

 private:
  Tangle() = default;

  std::shared_ptr<const Graph> ground_;
  int order_ = 0;
  MembershipPredicate predicate_;
  std::optional<std::vector<Separation>> materialized_;
  int materialized_order_ = -1;
};

enum class Axiom { Order, Invalid, T1, T2, T3 };

std::string_view to_string(Axiom axiom);

struct AxiomViolation {
  Axiom axiom;
  std::vector<Separation> witnesses;
  std::string message;
};

struct AxiomReport {
  bool passed = true;
  int separations_checked = 0;
  int members = 0;
  std::vector<AxiomViolation> violations;

  const AxiomViolation* first() const { return violations.empty() ? nullptr : &violations.front(); }
};

struct AxiomCheckOptions {
  EnumerationLimits limits;
  // Only separations of order <= max_order are considered when set.
  std::optional<int> max_order;
};

// (T1) every separation of order < θ has an orientation in the tangle;
// (T2) no three members (repetition allowed) have G[A1] ∪ G[A2] ∪ G[A3] = G;
// (T3) no member has A = V(G). Violations are listed in that axiom order;
// at most one T2 witness (the lexicographically first triple) is reported.
AxiomReport check_axioms(const Graph& g, const Tangle& t, const AxiomCheckOptions& options = {});

bool natural_membership(const GridGraph& w, const Separation& s);
Tangle natural_tangle(const GridGraph& w);

struct TruncatedTangle {
  Subgraph remainder;  // g - apex
  Tangle tangle;       // on remainder.graph, order reduced by |apex|
};

// T \ apex: separations (C, D) of g - apex of order < θ - |apex| such that
// (C ∪ apex, D ∪ apex) lies in t.
TruncatedTangle truncate(const Graph& g, const Tangle& t, const VertexSet& apex);

}  // namespace tanglekit
