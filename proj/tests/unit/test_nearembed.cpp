#include "doctest.h"
#include "tanglekit/fixtures.hpp"
#include "tanglekit/nearembed.hpp"

using namespace tanglekit;

namespace {

// Independent ceiling-free checks of the two constant conditions.
bool n1_ok(std::int64_t a, std::int64_t s, std::int64_t k, std::int64_t alpha, std::int64_t n2, std::int64_t g,
           std::int64_t n1) {
  // n1/7 - 2(a+1)g - ask >= 3g + (n2-1)alpha, times 7
  return n1 - 7 * (2 * (a + 1) * g + a * s * k) >= 7 * (3 * g + (n2 - 1) * alpha);
}

bool r_ok(std::int64_t theta, std::int64_t alpha, std::int64_t n1, std::int64_t g, std::int64_t r) {
  return r >= theta && r > 3 * alpha && r * r > (n1 + g) * 9 * alpha * alpha + n1;
}

ConstantsProfile profile() { return compute_constants(1, 1, 1, 2, 3, 1); }

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(31, 2).str() == "31/2");
  CHECK(Rational(4).str() == "4");
}

TEST_CASE("constants examples and minimality") {
  const ConstantsProfile p = compute_constants(1, 1, 1, 2, 5, 1);
  CHECK(p.g == 0);
  CHECK(p.n1 == 7);
  CHECK(p.r == 17);
  const ConstantsProfile q = compute_constants(1, 2, 1, 2, 5, 1);
  CHECK(q.g == 2);
  CHECK(q.n1 == 112);
  CHECK(q.r == 65);

  for (std::int64_t s = 1; s <= 3; ++s) {
    for (std::int64_t alpha = 2; alpha <= 4; ++alpha) {
      for (std::int64_t n2 = 1; n2 <= 3; ++n2) {
        const ConstantsProfile c = compute_constants(1, s, 2, alpha, 5, n2);
        std::int64_t choose = alpha;  // binom(alpha, 1)
        CHECK(c.g == (s * 2 - 1) * choose);
        std::int64_t n1 = 1;
        while (!n1_ok(1, s, 2, alpha, n2, c.g, n1)) ++n1;
        CHECK(c.n1 == n1);
        std::int64_t r = 1;
        while (!r_ok(5, alpha, n1, c.g, r)) ++r;
        CHECK(c.r == r);
      }
    }
  }
}

TEST_CASE("constants errors") {
  try {
    compute_constants(1, 1, 1, 1, 5, 1);
    FAIL("alpha = 1 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AlphaTooSmall);
  }
  try {
    compute_constants(0, 1, 1, 2, 5, 1);
    FAIL("a = 0 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
  try {
    compute_constants(30, 1000000, 1000000, 60, 5, 1);
    FAIL("overflow missed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Overflow);
  }
}

TEST_CASE("fixture certificates validate") {
  const auto t = fixtures::trivial_certificate();
  CHECK(validate_certificate(t.graph, t.cert).ok);
  const auto c = fixtures::composite();
  const CertificateReport rep = validate_certificate(c.graph, c.cert, profile());
  CHECK(rep.ok);
  CHECK(rep.checks > 0);

  const auto s = fixtures::small_vortex_too_long();
  const CertificateReport too_long = validate_certificate(s.graph, s.cert);
  REQUIRE_FALSE(too_long.ok);
  CHECK(too_long.has(CertViolationKind::SmallVortexTooLong));
}

TEST_CASE("certificate mutations") {
  const auto c = fixtures::composite();

  auto no_disc = c.cert;
  no_disc.discs.pop_back();
  CHECK(validate_certificate(c.graph, no_disc).has(CertViolationKind::DiscMissing));

  auto wrong_face = c.cert;
  wrong_face.discs.back().face = wrong_face.discs.front().face;
  wrong_face.discs.back().start.reset();
  CHECK(validate_certificate(c.graph, wrong_face).has(CertViolationKind::SocietyNotOnFace));

  auto no_comb = c.cert;
  no_comb.large_vortices.front().comb.reset();
  CHECK(validate_certificate(c.graph, no_comb).has(CertViolationKind::CombMissing));

  auto crossing = c.cert;
  crossing.large_vortices.front().comb =
      Comb{Path({0, 9, 10, 1, 14, 2, 15, 5}), {Path({0}), Path({1}), Path({2}), Path({5})}};
  CHECK(validate_certificate(c.graph, crossing).has(CertViolationKind::CombMeetsLinkage));

  auto unknown = c.cert;
  unknown.apex = {99};
  CHECK(validate_certificate(c.graph, unknown).has(CertViolationKind::UnknownVertex));

  // 4-5 joins the small and the large vortex, so no part can take it over.
  auto dropped_edge = c.cert;
  std::erase(dropped_edge.g0_edges, Edge{4, 5});
  CHECK(validate_certificate(c.graph, dropped_edge).has(CertViolationKind::EdgeNotCovered));
  // 0-1 joins two society vertices of vortex 1 and falls to that vortex.
  auto absorbed = c.cert;
  std::erase(absorbed.g0_edges, Edge{0, 1});
  CHECK_FALSE(validate_certificate(c.graph, absorbed).has(CertViolationKind::EdgeNotCovered));

  auto society = c.cert;
  society.small_vortices.front().society = {3, 4};
  CHECK(validate_certificate(c.graph, society).has(CertViolationKind::SocietyMismatch));

  auto overlap = c.cert;
  overlap.small_vortices.front().vertices = {3, 4, 7, 9, 16};
  CHECK_FALSE(validate_certificate(c.graph, overlap).ok);
}

TEST_CASE("interleaved societies on one face") {
  const GridGraph w = make_grid(3);
  std::vector<Edge> edges = w.graph().edges();
  for (Edge e : std::vector<Edge>{{3, 9}, {7, 9}, {4, 10}, {6, 10}}) edges.push_back(e);
  const Graph g(11, edges);
  NearEmbeddingCertificate cert = fixtures::trivial_certificate().cert;
  cert.small_vortices.push_back(SmallVortexCert{1, {3, 7, 9}, {3, 7}});
  cert.small_vortices.push_back(SmallVortexCert{2, {4, 6, 10}, {4, 6}});
  cert.discs.push_back(fixtures::find_disc(cert, 1, {3, 7}));
  cert.discs.push_back(fixtures::find_disc(cert, 2, {4, 6}));
  cert.discs[0].face = cert.discs[1].face;
  cert.discs[0].start.reset();
  const CertificateReport rep = validate_certificate(g, cert);
  CHECK(rep.has(CertViolationKind::InterleavedSocieties));
}

TEST_CASE("respects the extended natural tangle") {
  const auto c = fixtures::composite();
  Tangle t = extended_tangle(c.model, natural_tangle(c.grid));
  RespectsOptions options;
  options.limits.max_vertices = 20;
  t.materialize(options.limits);
  const RespectsReport ok = respects_check(c.graph, c.cert, t, options);
  CHECK(ok.ok);
  CHECK(ok.separations_checked == 322);
  CHECK(ok.members == 161);

  const RespectsReport swollen = respects_check(c.graph, fixtures::swollen_small_vortex(c), t, options);
  REQUIRE_FALSE(swollen.ok);
  for (const auto& v : swollen.violations) {
    CHECK(t.contains(v.separation));
    CHECK(v.container == "smallvortex 2");
    CHECK(is_subset(v.separation.side_b(), fixtures::swollen_small_vortex(c).small_vortices[0].vertices));
  }
  CHECK(respects_check(c.graph, fixtures::trivial_certificate().cert, t, options).ok);

  auto big_apex = c.cert;
  big_apex.apex = {13, 14, 15};
  try {
    respects_check(c.graph, big_apex, t, options);
    FAIL("apex too large accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ApexTooLarge);
  }
}

TEST_CASE("essential vertices and wideness") {
  const auto c = fixtures::composite();
  CHECK(essential_vertices(c.cert) == VertexSet{0, 1, 2, 3, 4, 5, 7});
  CHECK(is_m_wide(c.cert, 1, 0));
  CHECK(is_m_wide(c.cert, 1, 4));
  CHECK_FALSE(is_m_wide(c.cert, 1, 5));
  try {
    is_m_wide(c.cert, 7, 1);
    FAIL("bad label accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }
  // Degree exactly 7 in G0 is not essential.
  CHECK(essential_vertices(fixtures::dense_society()).empty());
  CHECK(essential_vertices(fixtures::trivial_certificate().cert).empty());
}

TEST_CASE("euler report") {
  const ConstantsProfile p = compute_constants(1, 1, 1, 2, 5, 1);
  const EulerReport w3 = euler_report(fixtures::trivial_certificate().cert, p);
  CHECK(w3.vertices == 9);
  CHECK(w3.edges == 12);
  CHECK(w3.faces == 5);
  CHECK(w3.euler_genus == 0);
  CHECK(w3.line("euler-formula").lhs == Rational(2));
  CHECK(w3.line("edges-upper").holds);
  CHECK(w3.line("edges-upper").lhs == Rational(10));
  CHECK(w3.line("edges-upper").rhs == Rational(4));
  CHECK(w3.x + w3.y + w3.z == 9);

  const EulerReport dense = euler_report(fixtures::dense_society(), p);
  CHECK_FALSE(dense.line("degree-sum").holds);
  CHECK(dense.line("degree-sum").lhs == Rational(8));
  CHECK(dense.line("degree-sum").rhs == Rational(11));
  CHECK(dense.x == 0);
  CHECK(dense.y == 7);
  CHECK(dense.z == 1);
}

TEST_CASE("branch set counts on the composite") {
  const auto c = fixtures::composite();
  const BranchCountReport rep = branch_count_check(c.graph, c.cert, c.model, profile());
  CHECK(rep.ok);
  REQUIRE(rep.parts.size() == 5);
  CHECK(rep.parts[0].part == "small 2");
  CHECK(rep.parts[0].order == 3);
  CHECK(rep.parts[0].branch_sets <= 9);
  for (const auto& part : rep.parts) {
    CHECK(is_separation(c.graph, part.separation));
    CHECK(part.holds == (part.branch_sets <= part.order * part.order));
    if (part.order < 3) CHECK(part.member);
  }
  const BranchCountReport trivial = branch_count_check(fixtures::trivial_certificate().graph,
                                                       fixtures::trivial_certificate().cert, identity_model(make_grid(3).graph()), profile());
  CHECK(trivial.ok);
  CHECK(trivial.parts.empty());

  MinorModel bad = c.model;
  bad.pattern = fixtures::complete_graph(9);
  try {
    branch_count_check(c.graph, c.cert, bad, profile());
    FAIL("non-grid pattern accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidModel);
  }
}

TEST_CASE("hypotheses") {
  const HypothesisReport k6 = check_hypotheses(fixtures::complete_graph(6), 1);
  CHECK(k6.kappa == 5);
  CHECK(k6.kappa_threshold == 5);
  CHECK(k6.kappa_ok);
  CHECK(k6.delta == 5);
  CHECK(k6.delta_threshold == Rational(28));
  CHECK_FALSE(k6.delta_ok);
  const HypothesisReport k29 = check_hypotheses(fixtures::complete_graph(29), 1);
  CHECK(k29.kappa_ok);
  CHECK(k29.delta_ok);
  CHECK(check_hypotheses(fixtures::complete_graph(29), 2).delta_threshold == Rational(87, 2));
  try {
    check_hypotheses(Graph(1, {}), 1);
    FAIL("single vertex accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooSmall);
  }
}
