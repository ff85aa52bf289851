#include <random>

#include "doctest.h"
#include "../oracles.hpp"
#include "tanglekit/fixtures.hpp"
#include "tanglekit/minor.hpp"

using namespace tanglekit;

namespace {

MinorModel model(Graph host, Graph pattern, std::vector<VertexSet> sets) {
  return MinorModel{std::move(host), std::move(pattern), std::move(sets)};
}

// Independent image of a separation: pattern vertex h goes to the side(s)
// its branch set touches.
Separation image(const MinorModel& m, const Separation& s) {
  std::vector<Vertex> a, b;
  for (Vertex h = 0; h < m.pattern.vertex_count(); ++h) {
    for (Vertex v : m.branch_set(h)) {
      if (std::find(s.side_a().begin(), s.side_a().end(), v) != s.side_a().end()) a.push_back(h);
      if (std::find(s.side_b().begin(), s.side_b().end(), v) != s.side_b().end()) b.push_back(h);
    }
  }
  return Separation(a, b);
}

}  // namespace

TEST_CASE("model validation") {
  const Graph k2(2, {{0, 1}});
  CHECK(validate_model(model(fixtures::path_graph(3), k2, {{0}, {1, 2}})).valid);
  CHECK(validate_model(identity_model(make_grid(3).graph())).valid);

  auto kind = [](const MinorModel& m) { return validate_model(m).first()->kind; };
  CHECK(kind(model(fixtures::path_graph(3), k2, {{0, 2}, {1}})) == ModelViolationKind::DisconnectedBranchSet);
  CHECK(kind(model(Graph(3, {{0, 1}}), k2, {{0}, {2}})) == ModelViolationKind::MissingPatternEdge);
  CHECK(kind(model(fixtures::path_graph(3), k2, {{0, 1}, {1, 2}})) == ModelViolationKind::OverlappingBranchSets);
  CHECK(kind(model(fixtures::path_graph(3), k2, {{0}})) == ModelViolationKind::WrongBranchSetCount);
  CHECK(kind(model(fixtures::path_graph(3), k2, {{0}, {}})) == ModelViolationKind::EmptyBranchSet);
  CHECK(kind(model(fixtures::path_graph(3), k2, {{0}, {7}})) == ModelViolationKind::VertexOutOfRange);
}

TEST_CASE("induced separation examples") {
  const MinorModel m = model(fixtures::path_graph(3), Graph(2, {{0, 1}}), {{0}, {1, 2}});
  CHECK(induced_separation(m, Separation({0, 1}, {1, 2})) == Separation({0, 1}, {1}));
  CHECK(induced_separation(m, Separation({0}, {0, 1, 2})) == Separation({0}, {0, 1}));
  try {
    induced_separation(m, Separation({0}, {2}));
    FAIL("non-separation accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotASeparation);
  }
  CHECK(branch_sets_meeting(m, {1, 2}) == 1);
  CHECK(branch_sets_meeting(m, {0, 2}) == 2);
}

TEST_CASE("induced separations over every fixture and separation") {
  for (const auto& f : fixtures::host_model_fixtures()) {
    REQUIRE(validate_model(f.model).valid);
    if (f.model.host.vertex_count() > 10) continue;
    for (const Separation& s : oracle::separations(f.model.host, 3)) {
      const Separation got = induced_separation(f.model, s);
      CHECK(got == image(f.model, s));
      CHECK(is_separation(f.model.pattern, got));
      CHECK(got.order() <= s.order());
    }
  }
}

TEST_CASE("extended tangle on the pendant grid") {
  const auto p = fixtures::pendant_w3();
  const Tangle natural = natural_tangle(p.grid);
  const Tangle t = extended_tangle(p.model, natural);
  CHECK(t.order() == 3);
  CHECK(check_axioms(p.host, t).passed);

  const VertexSet all = p.host.all_vertices();
  CHECK(t.contains(Separation({p.corner, p.pendant}, set_difference(all, {p.pendant}))));
  CHECK_FALSE(t.contains(Separation(set_difference(all, {p.pendant}), {p.corner, p.pendant})));

  int members = 0;
  for (const Separation& s : oracle::separations(p.host, 2)) {
    const Separation down = image(p.model, s);
    const bool mine = down.order() < 3 && oracle::has_cross(3, down.side_b());
    CHECK(extended_membership(p.model, natural, s) == mine);
    if (mine) {
      ++members;
      CHECK(branch_sets_meeting(p.model, s.side_a()) <= s.order() * s.order());
    }
  }
  CHECK(members == 69);
}

TEST_CASE("minor search") {
  const Graph w3 = make_grid(3).graph();
  const auto w2 = find_minor_model(w3, make_grid(2).graph());
  REQUIRE(w2.has_value());
  CHECK(validate_model(*w2).valid);
  CHECK_FALSE(find_minor_model(w3, fixtures::complete_graph(5)).has_value());
  const auto k1 = find_minor_model(Graph(1, {}), Graph(1, {}));
  REQUIRE(k1.has_value());
  CHECK(k1->branch_sets == std::vector<VertexSet>{{0}});
  try {
    find_minor_model(make_grid(4).graph(), make_grid(2).graph());
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InstanceTooLarge);
  }
}
