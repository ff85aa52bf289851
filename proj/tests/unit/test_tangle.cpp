#include <set>

#include "doctest.h"
#include "../oracles.hpp"
#include "tanglekit/fixtures.hpp"
#include "tanglekit/minor.hpp"
#include "tanglekit/tangle.hpp"

using namespace tanglekit;

TEST_CASE("natural membership examples") {
  const GridGraph w = make_grid(2);
  const VertexSet all = w.graph().all_vertices();
  CHECK(natural_membership(w, Separation({}, all)));
  CHECK_FALSE(natural_membership(w, Separation(all, {})));
  CHECK(natural_membership(w, Separation({w.id(1, 1)}, all)));
  CHECK_FALSE(natural_membership(w, Separation(all, {w.id(1, 1)})));
  try {
    natural_membership(w, Separation({0}, {3}));
    FAIL("non-separation accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotASeparation);
  }
}

TEST_CASE("natural tangles of W_2 and W_3 pass the axioms") {
  for (int r : {2, 3}) {
    const GridGraph w = make_grid(r);
    const AxiomReport rep = check_axioms(w.graph(), natural_tangle(w));
    CHECK(rep.passed);
    CHECK(rep.separations_checked == static_cast<int>(oracle::separations(w.graph(), r - 1).size()));
  }
}

TEST_CASE("exactly one orientation, with the oracle's own cross test") {
  for (int r : {2, 3}) {
    const GridGraph w = make_grid(r);
    const Tangle t = natural_tangle(w);
    for (const Separation& s : oracle::separations(w.graph(), r - 1)) {
      const bool mine = oracle::has_cross(r, s.side_b());
      CHECK(t.contains(s) == mine);
      CHECK(t.contains(s) != t.contains(s.reversed()));
      if (mine) CHECK(static_cast<int>(s.side_a().size()) <= s.order() * s.order());
    }
  }
}

TEST_CASE("mutations hit T1 and T2") {
  const GridGraph w = make_grid(2);
  Tangle natural = natural_tangle(w);
  natural.materialize();
  const Separation corner({0}, w.graph().all_vertices());

  auto dropped = natural.members();
  std::erase(dropped, corner);
  const AxiomReport t1 = check_axioms(w.graph(), Tangle::from_members(w.graph(), 2, dropped));
  REQUIRE_FALSE(t1.passed);
  CHECK(t1.violations.size() == 1);
  CHECK(t1.first()->axiom == Axiom::T1);

  auto doubled = natural.members();
  doubled.push_back(corner.reversed());
  const AxiomReport t2 = check_axioms(w.graph(), Tangle::from_members(w.graph(), 2, doubled));
  REQUIRE_FALSE(t2.passed);
  CHECK(t2.first()->axiom == Axiom::T2);
  CHECK(t2.first()->witnesses.size() == 3);
}

TEST_CASE("explicit members outside the order or not separations") {
  const GridGraph w = make_grid(2);
  Tangle natural = natural_tangle(w);
  natural.materialize();
  auto members = natural.members();
  members.push_back(Separation({0, 1, 2}, {0, 1, 2, 3}));
  members.push_back(Separation({0}, {3}));
  const AxiomReport rep = check_axioms(w.graph(), Tangle::from_members(w.graph(), 2, members));
  REQUIRE(rep.violations.size() >= 2);
  CHECK(rep.violations[0].axiom == Axiom::Order);
  CHECK(rep.violations[1].axiom == Axiom::Invalid);
}

TEST_CASE("T3 on a member with A = V") {
  const Graph g(1, {});
  const Tangle t = Tangle::from_members(g, 1, {Separation({0}, {}), Separation({}, {0})});
  const AxiomReport rep = check_axioms(g, t);
  CHECK_FALSE(rep.passed);
  bool t3 = false;
  for (const auto& v : rep.violations) t3 = t3 || v.axiom == Axiom::T3;
  CHECK(t3);
}

TEST_CASE("materialize is thread independent") {
  const GridGraph w = make_grid(3);
  Tangle a = natural_tangle(w), b = natural_tangle(w);
  a.materialize({16, 1});
  b.materialize({16, 4});
  CHECK(a.members() == b.members());
  CHECK(a.members().size() == 50);
  CHECK(a.materialized_order() == 2);
}

TEST_CASE("truncation") {
  const GridGraph w = make_grid(3);
  const Tangle t = natural_tangle(w);

  const TruncatedTangle same = truncate(w.graph(), t, {});
  CHECK(same.tangle.order() == 3);
  for (const Separation& s : oracle::separations(w.graph(), 2)) CHECK(same.tangle.contains(s) == t.contains(s));

  const TruncatedTangle one = truncate(w.graph(), t, {4});
  CHECK(one.tangle.order() == 2);
  CHECK(one.remainder.graph.vertex_count() == 8);
  for (const Separation& s : oracle::separations(one.remainder.graph, 1)) {
    const Separation up(set_union(one.remainder.lift(s.side_a()), {4}), set_union(one.remainder.lift(s.side_b()), {4}));
    CHECK(one.tangle.contains(s) == t.contains(up));
  }
  CHECK(check_axioms(one.remainder.graph, one.tangle).passed);

  try {
    truncate(w.graph(), t, {0, 1, 2});
    FAIL("apex too large accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ApexTooLarge);
  }
}

TEST_CASE("truncating the pendant vertex") {
  const auto p = fixtures::pendant_w3();
  const Tangle ext = extended_tangle(p.model, natural_tangle(p.grid));
  const TruncatedTangle t = truncate(p.host, ext, {p.pendant});
  CHECK(t.tangle.order() == 2);
  int members = 0;
  for (const Separation& s : oracle::separations(t.remainder.graph, 1)) {
    const Separation up(set_union(t.remainder.lift(s.side_a()), {p.pendant}),
                        set_union(t.remainder.lift(s.side_b()), {p.pendant}));
    CHECK(t.tangle.contains(s) == ext.contains(up));
    members += t.tangle.contains(s);
  }
  CHECK(members > 0);
}
