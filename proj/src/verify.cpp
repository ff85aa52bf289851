#include "tanglekit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>

#include "tanglekit/fixtures.hpp"
#include "tanglekit/minor.hpp"
#include "tanglekit/nearembed.hpp"
#include "tanglekit/surface.hpp"
#include "tanglekit/tangle.hpp"
#include "tanglekit/vortex.hpp"

namespace tanglekit::verify {

void CriterionResult::expect(bool ok, const std::string& what) {
  ++checked;
  if (!ok) {
    passed = false;
    failures.push_back(what);
  }
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

CriterionResult timed(int id, std::string name, const std::function<void(CriterionResult&)>& body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  const auto start = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = since(start);
  return r;
}

std::string sep_text(const Separation& s) { return format_separation(s); }

// Separator of random size, each component of G - S thrown on a random side.
Separation random_separation(const Graph& g, std::mt19937_64& rng) {
  const int n = g.vertex_count();
  std::uniform_int_distribution<int> size_pick(0, std::min(n, 4));
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
  std::shuffle(all.begin(), all.end(), rng);
  const VertexSet separator = make_set(std::vector<Vertex>(all.begin(), all.begin() + size_pick(rng)));
  VertexSet a = separator;
  VertexSet b = separator;
  std::bernoulli_distribution coin(0.5);
  for (const VertexSet& comp : components(g, separator)) {
    if (coin(rng)) {
      a = set_union(a, comp);
    } else {
      b = set_union(b, comp);
    }
  }
  return Separation(a, b);
}

}  // namespace

GridcutReport gridcut(int r, std::optional<int> max_order, int threads) {
  const GridGraph w = make_grid(r);
  GridcutReport rep;
  rep.r = r;
  rep.max_order = r - 1;
  if (max_order) rep.max_order = std::min(rep.max_order, *max_order);
  const EnumerationLimits limits{std::max(kDefaultBruteForceCap, r * r), threads};
  for (const Separation& s : enumerate_separations(w.graph(), rep.max_order, limits)) {
    ++rep.separations;
    if (!natural_membership(w, s)) continue;
    ++rep.members;
    const auto order = static_cast<std::size_t>(s.order());
    if (s.side_a().size() > order * order) rep.violations.push_back(s);
  }
  return rep;
}

CriterionResult gridcut_criterion(const VerifyOptions& o) {
  return timed(1, "gridcut: |A| <= s^2 for natural-tangle members", [&](CriterionResult& r) {
    struct Run {
      int r;
      std::optional<int> cap;
      double limit;
    };
    std::vector<Run> runs{{2, std::nullopt, 60}, {3, std::nullopt, 60}};
    if (o.include_w4) runs.push_back({4, 3, 600});
    for (const Run& run : runs) {
      const auto start = Clock::now();
      // the time limits are stated for one thread
      const GridcutReport rep = gridcut(run.r, run.cap, run.r == 4 ? o.threads : 1);
      const double secs = since(start);
      r.notes.push_back("W_" + std::to_string(run.r) + ": " + std::to_string(rep.separations) + " separations, " +
                        std::to_string(rep.members) + " members, " + std::to_string(secs) + " s");
      r.expect(rep.members > 0, "W_" + std::to_string(run.r) + " has natural-tangle members");
      for (const Separation& s : rep.violations) r.expect(false, "W_" + std::to_string(run.r) + " " + sep_text(s));
      r.expect(rep.violations.empty(), "W_" + std::to_string(run.r) + " has no violations");
      r.expect(secs < run.limit, "W_" + std::to_string(run.r) + " within " + std::to_string(run.limit) + " s");
    }
  });
}

CriterionResult tangle_axioms_criterion(const VerifyOptions& o) {
  return timed(2, "natural tangles satisfy T1-T3; mutations rejected", [&](CriterionResult& r) {
    AxiomCheckOptions options;
    options.limits.threads = o.threads;
    for (int size : {2, 3}) {
      const GridGraph w = make_grid(size);
      const Tangle t = natural_tangle(w);
      const AxiomReport rep = check_axioms(w.graph(), t, options);
      r.expect(rep.passed, "natural tangle of W_" + std::to_string(size) + " passes T1-T3" +
                               (rep.passed ? "" : ": " + rep.first()->message));
      std::set<Separation> seen;
      int pairs = 0;
      for (const Separation& s : enumerate_separations(w.graph(), size - 1, options.limits)) {
        if (seen.count(s)) continue;
        seen.insert(s);
        seen.insert(s.reversed());
        ++pairs;
        const int oriented = (t.contains(s) ? 1 : 0) + (t.contains(s.reversed()) ? 1 : 0);
        r.expect(oriented == 1, "exactly one orientation of " + sep_text(s) + " in W_" + std::to_string(size));
      }
      r.notes.push_back("W_" + std::to_string(size) + ": " + std::to_string(rep.separations_checked) +
                        " separations, " + std::to_string(pairs) + " unoriented");
    }
    const GridGraph w2 = make_grid(2);
    Tangle natural = natural_tangle(w2);
    natural.materialize();
    const Separation dropped({w2.id(1, 1)}, w2.graph().all_vertices());
    std::vector<Separation> members = natural.members();
    r.expect(std::erase(members, dropped) == 1, "dropped member was present");
    const AxiomReport t1 = check_axioms(w2.graph(), Tangle::from_members(w2.graph(), 2, members));
    r.expect(!t1.passed && t1.first()->axiom == Axiom::T1, "dropped orientation gives T1");

    members = natural.members();
    members.push_back(dropped.reversed());
    const AxiomReport t2 = check_axioms(w2.graph(), Tangle::from_members(w2.graph(), 2, members));
    r.expect(!t2.passed && t2.first()->axiom == Axiom::T2, "doubled orientation gives T2");
  });
}

CriterionResult induced_separation_criterion(const VerifyOptions& o) {
  return timed(3, "induced separations are separations of no larger order", [&](CriterionResult& r) {
    const auto fixtures = fixtures::host_model_fixtures();
    for (const auto& f : fixtures) r.expect(validate_model(f.model).valid, std::string(f.name) + " model is valid");
    std::mt19937_64 rng(o.seed);
    for (int i = 0; i < 1000; ++i) {
      const auto& f = fixtures[static_cast<std::size_t>(i) % fixtures.size()];
      const Separation s = random_separation(f.model.host, rng);
      if (!is_separation(f.model.host, s)) {
        r.expect(false, std::string(f.name) + " generator produced " + sep_text(s));
        continue;
      }
      const Separation image = induced_separation(f.model, s);
      r.expect(is_separation(f.model.pattern, image) && image.order() <= s.order(),
               std::string(f.name) + ": " + sep_text(s) + " -> " + sep_text(image));
    }
    r.notes.push_back("1000 random separations over " + std::to_string(fixtures.size()) + " host/model pairs");
  });
}

CriterionResult extended_tangle_criterion(const VerifyOptions& o) {
  return timed(4, "extended tangle on pendant W_3 is a tangle; branch-set count", [&](CriterionResult& r) {
    const auto p = fixtures::pendant_w3();
    Tangle t = extended_tangle(p.model, natural_tangle(p.grid));
    AxiomCheckOptions options;
    options.limits.threads = o.threads;
    const AxiomReport rep = check_axioms(p.host, t, options);
    r.expect(rep.passed, "extended tangle passes T1-T3" + (rep.passed ? std::string() : ": " + rep.first()->message));
    t.materialize(options.limits);
    for (const Separation& s : t.members()) {
      const int count = branch_sets_meeting(p.model, s.side_a());
      r.expect(count <= s.order() * s.order(), "branch sets meeting A of " + sep_text(s) + " = " + std::to_string(count));
    }
    r.notes.push_back(std::to_string(rep.separations_checked) + " separations, " + std::to_string(t.members().size()) +
                      " members");
  });
}

CriterionResult menger_criterion(const VerifyOptions& o) {
  return timed(5, "max disjoint paths equal brute-force min separator", [&](CriterionResult& r) {
    std::mt19937_64 rng(o.seed + 5);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = std::uniform_int_distribution<int>(2, 12)(rng);
      const double density = std::uniform_real_distribution<double>(0.15, 0.6)(rng);
      std::bernoulli_distribution edge(density);
      std::vector<Edge> edges;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (edge(rng)) edges.push_back({u, v});
        }
      }
      const Graph g(n, edges);
      std::vector<Vertex> order(static_cast<std::size_t>(n));
      for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
      std::shuffle(order.begin(), order.end(), rng);
      const int s_size = std::uniform_int_distribution<int>(1, std::max(1, n / 3))(rng);
      const int t_size = std::uniform_int_distribution<int>(1, std::max(1, (n - s_size) / 2))(rng);
      const VertexSet s = make_set(std::vector<Vertex>(order.begin(), order.begin() + s_size));
      const VertexSet t = make_set(std::vector<Vertex>(order.begin() + s_size, order.begin() + s_size + t_size));
      const auto paths = max_disjoint_paths(g, s, t);
      const int brute = brute_min_separator(g, s, t);
      bool disjoint = true;
      VertexSet used;
      for (const Path& p : paths) {
        disjoint = disjoint && p.valid_in(g) && set_contains(s, p.front()) && set_contains(t, p.back()) &&
                   set_intersection(used, p.vertex_set()).empty();
        used = set_union(used, p.vertex_set());
      }
      r.expect(static_cast<int>(paths.size()) == brute && disjoint,
               "trial " + std::to_string(trial) + ": " + std::to_string(paths.size()) + " paths vs separator " +
                   std::to_string(brute));
    }
  });
}

CriterionResult vortex_criterion(const VerifyOptions&) {
  return timed(6, "caterpillar vortex linked with q = 1; mutations rejected", [&](CriterionResult& r) {
    const auto cat = fixtures::caterpillar();
    r.expect(check_vortex_decomposition(cat.vortex, cat.decomposition).ok, "caterpillar decomposition is valid");
    const LinkedReport linked = check_linked(cat.vortex, cat.decomposition);
    r.expect(linked.ok && linked.q == 1, "caterpillar is linked with q = 1");
    r.expect(linked.ok && check_linkage(cat.vortex, cat.decomposition, linked.linkage).ok, "computed linkage is valid");
    r.expect(check_linkage(cat.vortex, cat.decomposition, Linkage{{Path({0, 1, 2, 3})}, 1}).ok,
             "the path u_1..u_4 is a linkage");
    r.expect(check_comb(cat.vortex.graph, cat.comb, cat.vortex.society), "comb teeth are w_1..w_4 in order");

    const auto cut = fixtures::caterpillar_without_edge_u2u3();
    const LinkedReport no_paths = check_linked(cut.vortex, cut.decomposition);
    r.expect(no_paths.has(VortexViolationKind::NoDisjointPathSystem) && no_paths.first()->bag == 3,
             "deleting u_2u_3 gives NoDisjointPathSystem at bag 3");
    const auto missing = fixtures::caterpillar_missing_w2_in_x2();
    const VortexReport m = check_vortex_decomposition(missing.vortex, missing.decomposition);
    r.expect(!m.ok && m.first()->kind == VortexViolationKind::SocietyVertexNotInBag,
             "w_2 missing from X_2 gives SocietyVertexNotInBag");
    const std::vector<Vertex> permuted{cat.vortex.society[1], cat.vortex.society[0], cat.vortex.society[2],
                                       cat.vortex.society[3]};
    const CombReport teeth = comb_report(cat.vortex.graph, cat.comb, permuted);
    r.expect(!teeth.ok && teeth.first()->kind == CombViolationKind::TeethOrderMismatch,
             "permuted teeth give TeethOrderMismatch");
  });
}

namespace {

bool darts_partitioned(const RotationSystem& rs, const FaceSet& faces) {
  std::set<Dart> seen;
  std::size_t total = 0;
  for (const auto& f : faces.faces) {
    for (const Dart& d : f) {
      if (!seen.insert(d).second || !rs.graph().adjacent(d.tail, d.head)) return false;
    }
    total += f.size();
  }
  return total == 2 * static_cast<std::size_t>(rs.graph().edge_count()) && seen.size() == total;
}

}  // namespace

CriterionResult surface_criterion(const VerifyOptions& o) {
  return timed(7, "planar grids have genus 0; K5 has minimum Euler genus 2", [&](CriterionResult& r) {
    std::vector<std::pair<std::string, RotationSystem>> all;
    for (int size : {2, 3, 4}) {
      const RotationSystem rs = fixtures::planar_grid_rotation(make_grid(size));
      r.expect(euler_genus(rs) == 0, "W_" + std::to_string(size) + " planar rotation has genus 0");
      all.emplace_back("W_" + std::to_string(size), rs);
    }
    const RotationSystem k5 = fixtures::k5_rotation();
    r.expect(euler_genus(k5) == 2, "K5 fixture rotation has Euler genus 2");
    all.emplace_back("K5", k5);
    const int best = min_euler_genus_exhaustive(k5.graph(), 20'000'000, o.threads);
    r.expect(best == 2, "no K5 rotation system has Euler genus below 2 (found " + std::to_string(best) + ")");
    all.emplace_back("C4", RotationSystem(fixtures::cycle_graph(4), {{1, 3}, {2, 0}, {3, 1}, {0, 2}}));
    for (const auto& [name, rs] : all) {
      r.expect(darts_partitioned(rs, trace_faces(rs)), name + ": faces partition the darts, lengths sum to 2|E|");
    }
  });
}

CriterionResult euler_criterion(const VerifyOptions&) {
  return timed(8, "Euler report on planar W_3; x + y + z = |G0|", [&](CriterionResult& r) {
    const ConstantsProfile p = compute_constants(1, 1, 1, 2, 5, 1);
    const EulerReport e = euler_report(fixtures::trivial_certificate().cert, p);
    const auto& f = e.line("euler-formula");
    r.expect(e.vertices == 9 && e.edges == 12 && e.faces == 5 && f.holds && f.rhs == Rational(2),
             "9 - 12 + 5 = 2 - 0");
    const auto& one = e.line("edges-upper");
    r.expect(one.holds && one.lhs == Rational(10) && one.rhs == Rational(4), "edges-upper reads 10 > 4");
    const auto composite = fixtures::composite();
    for (const auto& [name, cert] : {std::pair<std::string, NearEmbeddingCertificate>{"trivial", fixtures::trivial_certificate().cert},
                                     {"composite", composite.cert},
                                     {"dense", fixtures::dense_society()},
                                     {"too-long", fixtures::small_vortex_too_long().cert}}) {
      const EulerReport rep = euler_report(cert, p);
      r.expect(rep.x + rep.y + rep.z == rep.vertices && rep.line("partition").holds, name + ": x + y + z = |G0|");
      r.expect(rep.line("euler-formula").holds, name + ": Euler formula");
    }
    const auto& two = euler_report(fixtures::dense_society(), p).line("degree-sum");
    r.expect(!two.holds && two.lhs == Rational(8) && two.rhs == Rational(11), "dense society: degree-sum fails as 8 >= 11");
  });
}

CriterionResult constants_criterion(const VerifyOptions&) {
  return timed(9, "constants and their minimality", [&](CriterionResult& r) {
    struct Case {
      std::int64_t s, g, n1, rr;
    };
    for (const Case c : {Case{1, 0, 7, 17}, Case{2, 2, 112, 65}}) {
      const ConstantsProfile p = compute_constants(1, c.s, 1, 2, 5, 1);
      const std::string tag = "(1," + std::to_string(c.s) + ",1,2,5,1)";
      r.expect(p.g == c.g && p.n1 == c.n1 && p.r == c.rr,
               tag + " -> g=" + std::to_string(p.g) + " n1=" + std::to_string(p.n1) + " r=" + std::to_string(p.r));
      r.expect(n1_condition(p, p.n1) && !n1_condition(p, p.n1 - 1), tag + ": n1 is minimal");
      r.expect(r_conditions(p, p.r) && !r_conditions(p, p.r - 1), tag + ": r is minimal");
    }
  });
}

CriterionResult near_embedding_criterion(const VerifyOptions& o) {
  return timed(10, "composite near-embedding validates and respects the tangle", [&](CriterionResult& r) {
    const auto c = fixtures::composite();
    const ConstantsProfile p = compute_constants(1, 1, 1, 2, 3, 1);
    const CertificateReport valid = validate_certificate(c.graph, c.cert, p);
    r.expect(valid.ok, "composite certificate is valid" +
                           (valid.ok ? std::string() : ": " + std::string(to_string(valid.first()->kind)) + " " +
                                                           valid.first()->message));
    const EnumerationLimits limits{20, o.threads};
    Tangle t = extended_tangle(c.model, natural_tangle(c.grid));
    t.materialize(limits);
    RespectsOptions ro;
    ro.limits = limits;
    const RespectsReport respects = respects_check(c.graph, c.cert, t, ro);
    r.expect(respects.ok, "composite respects the extended natural tangle");
    const RespectsReport swollen = respects_check(c.graph, fixtures::swollen_small_vortex(c), t, ro);
    r.expect(!swollen.ok, "swollen small vortex is reported");
    if (!swollen.ok) {
      r.notes.push_back("swollen: " + sep_text(swollen.violations.front().separation) + " inside " +
                        swollen.violations.front().container);
    }
    r.notes.push_back(std::to_string(respects.separations_checked) + " separations of G - A, " +
                      std::to_string(respects.members) + " members");
  });
}

CriterionResult hypotheses_criterion(const VerifyOptions&) {
  return timed(11, "connectivity and degree hypotheses", [&](CriterionResult& r) {
    const HypothesisReport k6 = check_hypotheses(fixtures::complete_graph(6), 1);
    r.expect(k6.kappa == 5 && k6.kappa_ok, "K6: kappa 5 >= 5");
    r.expect(k6.delta == 5 && !k6.delta_ok && k6.delta_threshold == Rational(28),
             "K6: delta 5 < 31(a+1)/2 - 3");
    const HypothesisReport k29 = check_hypotheses(fixtures::complete_graph(29), 1);
    r.expect(k29.kappa == 28 && k29.kappa_ok && k29.delta == 28 && k29.delta_ok, "K29 passes both");
  });
}

std::vector<CriterionResult> run_all(const VerifyOptions& o) {
  return {gridcut_criterion(o),       tangle_axioms_criterion(o), induced_separation_criterion(o),
          extended_tangle_criterion(o), menger_criterion(o),      vortex_criterion(o),
          surface_criterion(o),       euler_criterion(o),         constants_criterion(o),
          near_embedding_criterion(o), hypotheses_criterion(o)};
}

}  // namespace tanglekit::verify
