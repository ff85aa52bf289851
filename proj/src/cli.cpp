#include "tanglekit/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "tanglekit/io.hpp"
#include "tanglekit/nearembed.hpp"
#include "tanglekit/verify.hpp"

namespace tanglekit::cli {

namespace {

// Input problems: raised while loading files or validating arguments.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse:
    case ErrorCode::InstanceTooLarge:
    case ErrorCode::AlphaTooSmall:
    case ErrorCode::InvalidArgument:
    case ErrorCode::TooSmall:
    case ErrorCode::VertexOutOfRange:
    case ErrorCode::LoopEdge:
    case ErrorCode::Overflow:
    case ErrorCode::IndexOutOfRange:
      return true;
    default:
      return false;
  }
}

class Result {
 public:
  Result(std::ostream& out, std::string name) : out_(out), name_(std::move(name)) {}

  void line(const std::string& text) { out_ << text << '\n'; }
  void violation(std::string_view kind, const std::string& message) {
    failed_ = true;
    out_ << "VIOLATION " << kind << ' ' << message << '\n';
  }
  void count(std::int64_t n = 1) { checked_ += n; }
  int finish() {
    out_ << "RESULT " << name_ << ' ' << (failed_ ? "fail" : "pass") << " checked=" << checked_ << '\n';
    return failed_ ? 1 : 0;
  }

 private:
  std::ostream& out_;
  std::string name_;
  std::int64_t checked_ = 0;
  bool failed_ = false;
};

struct Options {
  int threads = 0;
  int max_vertices = kDefaultBruteForceCap;
  std::optional<int> max_order;
  std::string graph, tangle, model, pattern_tangle, cert, rotation, out, host, neighbors = "g0";
  int r = 0, a = 0, vortex = 0, m = 0;
  std::int64_t ca = 0, cs = 0, ck = 0, calpha = 0, ctheta = 0, cn2 = 0;
  std::optional<std::int64_t> alpha;
  bool materialize = false, check = false, allow_reversed = false, respects = false, exhaustive = false,
       skip_w4 = false;
  std::uint64_t max_systems = 20'000'000;
};

int resolve_threads(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("TANGLEKIT_THREADS")) {
    try {
      std::size_t used = 0;
      const int n = std::stoi(env, &used);
      if (used == std::string(env).size() && n > 0) return n;
    } catch (const std::exception&) {
    }
    throw UsageError("TANGLEKIT_THREADS must be a positive integer");
  }
  return 1;
}

EnumerationLimits limits_of(const Options& o) { return EnumerationLimits{o.max_vertices, o.threads}; }

Graph load_graph(const std::string& path) { return io::read_graph_file(path); }

template <typename T>
T parse_file(const std::string& path, const std::function<T(std::istream&)>& parse) {
  std::istringstream in(io::read_text_file(path));
  try {
    return parse(in);
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::string ids(const std::vector<Vertex>& v) { return io::format_ids(v); }

// --- subcommands

int cmd_grid(const Options& o, Result& res) {
  const GridGraph w = make_grid(o.r);
  std::vector<std::string> comments;
  for (Vertex v = 0; v < w.graph().vertex_count(); ++v) {
    const GridCoord c = w.coord(v);
    comments.push_back("coord " + std::to_string(v) + ' ' + std::to_string(c.row) + ' ' + std::to_string(c.column));
  }
  std::ostringstream text;
  io::write_graph(text, w.graph(), comments);
  write_file(o.out, text.str());
  res.line("grid r=" + std::to_string(o.r) + " vertices=" + std::to_string(w.graph().vertex_count()) +
           " edges=" + std::to_string(w.graph().edge_count()));
  res.count(w.graph().vertex_count());
  return res.finish();
}

int cmd_enum_seps(const Options& o, Result& res) {
  const Graph g = load_graph(o.graph);
  const auto seps = enumerate_separations(g, *o.max_order, limits_of(o));
  std::ostringstream text;
  for (const Separation& s : seps) {
    if (!is_separation(g, s)) res.violation("NotASeparation", format_separation(s));
    text << format_separation(s) << '\n';
  }
  if (o.out.empty()) {
    for (const Separation& s : seps) res.line(format_separation(s));
  } else {
    write_file(o.out, text.str());
  }
  res.line("count=" + std::to_string(seps.size()));
  res.count(static_cast<std::int64_t>(seps.size()));
  return res.finish();
}

void report_axioms(const AxiomReport& rep, Result& res) {
  res.line("separations=" + std::to_string(rep.separations_checked) + " members=" + std::to_string(rep.members));
  for (const AxiomViolation& v : rep.violations) {
    std::string text = v.message;
    for (std::size_t i = 0; i < v.witnesses.size(); ++i) text += (i ? "; " : ": ") + format_separation(v.witnesses[i]);
    res.violation(to_string(v.axiom), text);
  }
  res.count(rep.separations_checked);
}

Tangle load_tangle_file(const Graph& g, const std::string& path) {
  const auto file = parse_file<io::TangleFile>(path, [](std::istream& in) { return io::parse_tangle(in); });
  return io::load_tangle(g, file);
}

int cmd_check_tangle(const Options& o, Result& res) {
  const Graph g = load_graph(o.graph);
  const Tangle t = load_tangle_file(g, o.tangle);
  report_axioms(check_axioms(g, t, AxiomCheckOptions{limits_of(o), o.max_order}), res);
  return res.finish();
}

int cmd_natural_tangle(const Options& o, Result& res) {
  const GridGraph w = make_grid(o.r);
  std::ostringstream text;
  if (o.materialize) {
    Tangle t = natural_tangle(w);
    const int top = o.max_order ? std::min(*o.max_order, o.r - 1) : o.r - 1;
    t.materialize(EnumerationLimits{std::max(o.max_vertices, o.r * o.r), o.threads}, top);
    io::write_tangle(text, std::min(o.r, top + 1), t.members());
    res.line("tangle order=" + std::to_string(std::min(o.r, top + 1)) + " members=" + std::to_string(t.members().size()));
    res.count(static_cast<std::int64_t>(t.members().size()));
  } else {
    text << "tangle order=" << o.r << "\nnatural r=" << o.r << '\n';
    res.line("tangle order=" + std::to_string(o.r) + " natural");
    res.count();
  }
  write_file(o.out, text.str());
  return res.finish();
}

int cmd_verify_gridcut(const Options& o, Result& res) {
  const verify::GridcutReport rep = verify::gridcut(o.r, o.max_order, o.threads);
  res.line("r=" + std::to_string(rep.r) + " max-order=" + std::to_string(rep.max_order) +
           " separations=" + std::to_string(rep.separations) + " members=" + std::to_string(rep.members));
  for (const Separation& s : rep.violations) {
    res.violation("Gridcut", format_separation(s) + " has |A| = " + std::to_string(s.side_a().size()) + " > " +
                                 std::to_string(s.order() * s.order()));
  }
  res.count(rep.members);
  return res.finish();
}

MinorModel load_model_file(const Graph& host, const std::string& path) {
  try {
    return io::load_model(host, path);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw Error(ErrorCode::Parse, path + ": " + e.what());
    throw;
  }
}

int cmd_check_model(const Options& o, Result& res) {
  const Graph host = load_graph(o.host);
  const MinorModel m = load_model_file(host, o.model);
  const ModelReport rep = validate_model(m);
  res.line("pattern vertices=" + std::to_string(m.pattern.vertex_count()) +
           " edges=" + std::to_string(m.pattern.edge_count()));
  for (const auto& v : rep.violations) res.violation(to_string(v.kind), v.message);
  res.count(m.pattern.vertex_count() + m.pattern.edge_count());
  return res.finish();
}

int cmd_extend_tangle(const Options& o, Result& res) {
  const Graph host = load_graph(o.host);
  const MinorModel m = load_model_file(host, o.model);
  const Tangle pattern = load_tangle_file(m.pattern, o.pattern_tangle);
  const ModelReport valid = validate_model(m);
  if (!valid.valid) {
    for (const auto& v : valid.violations) res.violation(to_string(v.kind), v.message);
    return res.finish();
  }
  Tangle t = extended_tangle(m, pattern);
  if (!o.check) {
    t.materialize(limits_of(o), o.max_order);
    const int order = std::min(t.order(), t.materialized_order() + 1);
    std::ostringstream text;
    io::write_tangle(text, order, t.members());
    if (o.out.empty()) {
      std::istringstream lines(text.str());
      for (std::string l; std::getline(lines, l);) res.line(l);
    } else {
      write_file(o.out, text.str());
      res.line("tangle order=" + std::to_string(order) + " members=" + std::to_string(t.members().size()));
    }
    res.count(static_cast<std::int64_t>(t.members().size()));
    return res.finish();
  }
  report_axioms(check_axioms(host, t, AxiomCheckOptions{limits_of(o), o.max_order}), res);
  t.materialize(limits_of(o), o.max_order);
  std::int64_t counted = 0;
  for (const Separation& s : t.members()) {
    const int meeting = branch_sets_meeting(m, s.side_a());
    ++counted;
    if (meeting > s.order() * s.order()) {
      res.violation("BranchSetCount", format_separation(s) + " meets " + std::to_string(meeting) + " branch sets > " +
                                          std::to_string(s.order() * s.order()));
    }
  }
  res.line("branch-set counts checked=" + std::to_string(counted));
  res.count(counted);
  return res.finish();
}

int cmd_check_vortex(const Options& o, Result& res) {
  const Graph g = load_graph(o.graph);
  const auto c = parse_file<io::VortexCertificate>(o.cert, [](std::istream& in) { return io::parse_vortex_certificate(in); });
  const Vortex v{g, c.society};
  const VortexDecomposition d{c.bags};
  const LinkedReport linked = check_linked(v, d);
  res.count(static_cast<std::int64_t>(d.bags.size()));
  for (const auto& x : linked.violations) res.violation(to_string(x.kind), x.message);
  if (linked.ok) {
    res.line("linked q=" + std::to_string(linked.q));
    for (std::size_t i = 0; i < linked.adhesion_sets.size(); ++i) {
      res.line("Z " + std::to_string(i + 1) + ": " + ids(linked.adhesion_sets[i]));
    }
    for (const Path& p : linked.linkage.paths) res.line("linkpath: " + ids(p.vertices()));
    if (!c.linkage.empty()) {
      const VortexReport supplied = check_linkage(v, d, Linkage{c.linkage, linked.q});
      res.count();
      for (const auto& x : supplied.violations) res.violation(to_string(x.kind), "supplied " + x.message);
    }
  }
  if (c.comb) {
    const CombReport comb = comb_report(g, *c.comb, c.society, CombOptions{o.allow_reversed});
    res.count();
    for (const auto& x : comb.violations) res.violation(to_string(x.kind), x.message);
    if (comb.ok) res.line("comb teeth: " + ids(c.comb->teeth()));
  }
  return res.finish();
}

int cmd_genus(const Options& o, Result& res) {
  const Graph g = load_graph(o.graph);
  auto rotation = parse_file<std::vector<std::vector<Vertex>>>(
      o.rotation, [&g](std::istream& in) { return io::parse_rotation(in, g); });
  const RotationSystem rs(g, std::move(rotation));
  const FaceSet faces = trace_faces(rs);
  std::int64_t total = 0;
  for (int f = 0; f < faces.count(); ++f) {
    total += static_cast<std::int64_t>(faces.faces[static_cast<std::size_t>(f)].size());
    res.line("face " + std::to_string(f) + ": " + ids(faces.boundary(f)));
  }
  const int eps = euler_genus(rs);
  res.line("vertices=" + std::to_string(g.vertex_count()) + " edges=" + std::to_string(g.edge_count()) +
           " faces=" + std::to_string(faces.count()) + " euler-genus=" + std::to_string(eps));
  res.count(faces.count());
  if (total != 2 * static_cast<std::int64_t>(g.edge_count())) {
    res.violation("DartPartition", "face lengths sum to " + std::to_string(total));
  }
  if (eps < 0 || eps % 2 != 0) res.violation("EulerGenus", "orientable Euler genus must be even and >= 0");
  if (o.exhaustive) {
    const int best = min_euler_genus_exhaustive(g, o.max_systems, o.threads);
    res.line("minimum-euler-genus=" + std::to_string(best));
    res.count();
  }
  return res.finish();
}

NearEmbeddingCertificate load_cert(const std::string& path) {
  return parse_file<NearEmbeddingCertificate>(path, [](std::istream& in) { return io::parse_certificate(in); });
}

int cmd_check_near_embedding(const Options& o, Result& res) {
  const Graph g = load_graph(o.graph);
  const NearEmbeddingCertificate cert = load_cert(o.cert);
  std::optional<Tangle> tangle;
  if (!o.tangle.empty()) {
    tangle = load_tangle_file(g, o.tangle);
  } else if (!o.model.empty()) {
    const MinorModel m = load_model_file(g, o.model);
    const ModelReport valid = validate_model(m);
    if (!valid.valid) throw Error(ErrorCode::InvalidModel, valid.first()->message);
    tangle = extended_tangle(m, load_tangle_file(m.pattern, o.pattern_tangle));
  }
  if (o.respects && !tangle) throw UsageError("--respects needs --tangle or --model with --pattern-tangle");

  ValidationOptions vo;
  vo.alpha = o.alpha;
  vo.comb.allow_reversed = o.allow_reversed;
  const CertificateReport rep = validate_certificate(g, cert, vo);
  res.line("certificate checks=" + std::to_string(rep.checks) + " violations=" + std::to_string(rep.violations.size()));
  for (const auto& v : rep.violations) res.violation(to_string(v.kind), v.message);
  res.count(rep.checks);
  if (o.respects) {
    const RespectsReport r = respects_check(g, cert, *tangle, RespectsOptions{limits_of(o), o.max_order});
    res.line("respects separations=" + std::to_string(r.separations_checked) + " members=" + std::to_string(r.members));
    for (const auto& v : r.violations) res.violation("Respects", format_separation(v.separation) + " inside " + v.container);
    res.count(r.separations_checked);
  }
  return res.finish();
}

int cmd_wideness(const Options& o, Result& res) {
  const Graph g = load_graph(o.graph);
  const NearEmbeddingCertificate cert = load_cert(o.cert);
  if (o.neighbors != "g0" && o.neighbors != "host") throw UsageError("--neighbors must be g0 or host");
  const VertexSet essential =
      essential_vertices(g, cert, o.neighbors == "g0" ? NeighborCount::G0Edges : NeighborCount::HostEdgesWithinG0);
  const LargeVortexCert& lv = cert.large_vortex(o.vortex);
  std::vector<Vertex> hits;
  for (Vertex v : lv.society) {
    if (set_contains(essential, v)) hits.push_back(v);
  }
  res.line("essential: " + ids(essential));
  res.line("largevortex " + std::to_string(o.vortex) + " essential society: " + ids(hits) +
           " count=" + std::to_string(hits.size()) + " m=" + std::to_string(o.m));
  res.count(static_cast<std::int64_t>(lv.society.size()));
  if (static_cast<int>(hits.size()) < o.m) {
    res.violation("NotWide", "largevortex " + std::to_string(o.vortex) + " has " + std::to_string(hits.size()) +
                                 " essential society vertices, fewer than " + std::to_string(o.m));
  }
  return res.finish();
}

int cmd_constants(const Options& o, Result& res) {
  const ConstantsProfile p = compute_constants(o.ca, o.cs, o.ck, o.calpha, o.ctheta, o.cn2);
  res.line("g=" + std::to_string(p.g) + " n1=" + std::to_string(p.n1) + " r=" + std::to_string(p.r));
  res.count(4);
  if (!n1_condition(p, p.n1)) res.violation("N1Condition", "n1 fails its condition");
  if (p.n1 > 1 && n1_condition(p, p.n1 - 1)) res.violation("N1NotMinimal", "n1 - 1 also satisfies the condition");
  if (!r_conditions(p, p.r)) res.violation("RCondition", "r fails its conditions");
  if (r_conditions(p, p.r - 1)) res.violation("RNotMinimal", "r - 1 also satisfies the conditions");
  return res.finish();
}

int cmd_check_hypotheses(const Options& o, Result& res) {
  const Graph g = load_graph(o.graph);
  const HypothesisReport h = check_hypotheses(g, o.a);
  res.line("kappa=" + std::to_string(h.kappa) + " threshold=" + std::to_string(h.kappa_threshold));
  res.line("delta=" + std::to_string(h.delta) + " threshold=" + h.delta_threshold.str());
  res.count(2);
  if (!h.kappa_ok) {
    res.violation("Connectivity", "kappa " + std::to_string(h.kappa) + " < " + std::to_string(h.kappa_threshold));
  }
  if (!h.delta_ok) res.violation("MinDegree", "delta " + std::to_string(h.delta) + " < " + h.delta_threshold.str());
  return res.finish();
}

int cmd_verify_all(const Options& o, Result& res, std::ostream& err) {
  verify::VerifyOptions vo;
  vo.threads = o.threads;
  vo.include_w4 = !o.skip_w4;
  for (const auto& c : verify::run_all(vo)) {
    res.line("criterion " + std::to_string(c.id) + ' ' + (c.passed ? "pass" : "fail") + ' ' + c.name +
             " checked=" + std::to_string(c.checked));
    for (const auto& f : c.failures) res.violation("Criterion" + std::to_string(c.id), f);
    res.count(c.checked);
    err << "criterion " << c.id << ": " << c.seconds << " s\n";
  }
  return res.finish();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tanglekit: exhaustive checks for tangles, grids, vortices and near-embeddings", "tanglekit"};
  app.require_subcommand(1);
  Options o;

  auto sub = [&app, &o](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--threads", o.threads, "worker threads (default TANGLEKIT_THREADS or 1)")->check(CLI::PositiveNumber);
    return s;
  };
  auto max_vertices = [&o](CLI::App* s) {
    s->add_option("--max-vertices", o.max_vertices, "enumeration vertex cap")->capture_default_str()->check(CLI::Range(1, 63));
  };
  auto max_order = [&o](CLI::App* s, bool required = false) {
    auto* opt = s->add_option("--max-order", o.max_order, "highest separation order considered")->check(CLI::NonNegativeNumber);
    if (required) opt->required();
  };

  CLI::App* grid = sub("grid", "write the grid W_r");
  grid->add_option("--r", o.r)->required()->check(CLI::Range(1, 1000));
  grid->add_option("--out", o.out)->required();

  CLI::App* enum_seps = sub("enum-seps", "list every separation up to an order");
  enum_seps->add_option("--graph", o.graph)->required();
  max_order(enum_seps, true);
  max_vertices(enum_seps);
  enum_seps->add_option("--out", o.out);

  CLI::App* check_tangle = sub("check-tangle", "check the tangle axioms");
  check_tangle->add_option("--graph", o.graph)->required();
  check_tangle->add_option("--tangle", o.tangle)->required();
  max_order(check_tangle);
  max_vertices(check_tangle);

  CLI::App* natural = sub("natural-tangle", "write the natural tangle of W_r");
  natural->add_option("--r", o.r)->required()->check(CLI::Range(1, 7));
  natural->add_flag("--materialize", o.materialize);
  max_order(natural);
  max_vertices(natural);
  natural->add_option("--out", o.out)->required();

  CLI::App* gridcut = sub("verify-gridcut", "check |A| <= s^2 over the natural tangle of W_r");
  gridcut->add_option("--r", o.r)->required()->check(CLI::Range(1, 7));
  max_order(gridcut);

  CLI::App* check_model = sub("check-model", "validate a minor model");
  check_model->add_option("--host", o.host)->required();
  check_model->add_option("--model", o.model)->required();

  CLI::App* extend = sub("extend-tangle", "extend a pattern tangle along a minor model");
  extend->add_option("--host", o.host)->required();
  extend->add_option("--model", o.model)->required();
  extend->add_option("--pattern-tangle", o.pattern_tangle)->required();
  extend->add_flag("--check", o.check, "check the axioms and the branch-set count instead of writing members");
  max_order(extend);
  max_vertices(extend);
  extend->add_option("--out", o.out);

  CLI::App* vortex = sub("check-vortex", "check a vortex decomposition, linkage and comb");
  vortex->add_option("--graph", o.graph)->required();
  vortex->add_option("--cert", o.cert)->required();
  vortex->add_flag("--allow-reversed-comb", o.allow_reversed);

  CLI::App* genus = sub("genus", "trace faces and compute the Euler genus");
  genus->add_option("--graph", o.graph)->required();
  genus->add_option("--rotation", o.rotation)->required();
  genus->add_flag("--exhaustive", o.exhaustive, "also minimise over every rotation system");
  genus->add_option("--max-systems", o.max_systems)->capture_default_str();

  CLI::App* near = sub("check-near-embedding", "validate a near-embedding certificate");
  near->add_option("--graph", o.graph)->required();
  near->add_option("--cert", o.cert)->required();
  near->add_option("--alpha", o.alpha)->check(CLI::PositiveNumber);
  near->add_flag("--allow-reversed-comb", o.allow_reversed);
  auto* tangle_opt = near->add_option("--tangle", o.tangle);
  auto* model_opt = near->add_option("--model", o.model, "extend --pattern-tangle along this model");
  auto* pattern_opt = near->add_option("--pattern-tangle", o.pattern_tangle);
  model_opt->needs(pattern_opt)->excludes(tangle_opt);
  pattern_opt->needs(model_opt);
  near->add_flag("--respects", o.respects);
  max_order(near);
  max_vertices(near);

  CLI::App* wide = sub("wideness", "count essential society vertices of a large vortex");
  wide->add_option("--graph", o.graph)->required();
  wide->add_option("--cert", o.cert)->required();
  wide->add_option("--vortex", o.vortex)->required();
  wide->add_option("--m", o.m)->required()->check(CLI::NonNegativeNumber);
  wide->add_option("--neighbors", o.neighbors, "g0 (edges of G0) or host (G-edges inside V(G0))")->capture_default_str();

  CLI::App* constants = sub("constants", "compute g, n1 and r");
  constants->add_option("--a", o.ca)->required();
  constants->add_option("--s", o.cs)->required();
  constants->add_option("--k", o.ck)->required();
  constants->add_option("--alpha", o.calpha)->required();
  constants->add_option("--theta", o.ctheta)->required();
  constants->add_option("--n2", o.cn2)->required();

  CLI::App* hyp = sub("check-hypotheses", "evaluate the connectivity and minimum-degree hypotheses");
  hyp->add_option("--graph", o.graph)->required();
  hyp->add_option("--a", o.a)->required()->check(CLI::PositiveNumber);

  CLI::App* all = sub("verify-all", "run every exhaustive acceptance check");
  all->add_flag("--skip-w4", o.skip_w4, "skip the r = 4 gridcut run");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  std::ostringstream buffer;  // nothing reaches `out` from a command that ends in a usage error
  Result res(buffer, name);
  try {
    o.threads = resolve_threads(o.threads);
    static const std::map<std::string, std::function<int(const Options&, Result&)>> table{
        {"grid", cmd_grid},
        {"enum-seps", cmd_enum_seps},
        {"check-tangle", cmd_check_tangle},
        {"natural-tangle", cmd_natural_tangle},
        {"verify-gridcut", cmd_verify_gridcut},
        {"check-model", cmd_check_model},
        {"extend-tangle", cmd_extend_tangle},
        {"check-vortex", cmd_check_vortex},
        {"genus", cmd_genus},
        {"check-near-embedding", cmd_check_near_embedding},
        {"wideness", cmd_wideness},
        {"constants", cmd_constants},
        {"check-hypotheses", cmd_check_hypotheses},
    };
    int code = 0;
    if (name == "verify-all") {
      code = cmd_verify_all(o, res, err);
    } else {
      code = table.at(name)(o, res);
    }
    out << buffer.str();
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    if (is_input_error(e.code())) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
    res.violation(to_string(e.code()), e.what());
    res.finish();
    out << buffer.str();
    return 1;
  }
}

}  // namespace tanglekit::cli
