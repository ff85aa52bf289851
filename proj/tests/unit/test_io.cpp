#include <sstream>

#include "doctest.h"
#include "tanglekit/fixtures.hpp"
#include "tanglekit/io.hpp"

using namespace tanglekit;

namespace {

template <class F>
ErrorCode code_of(F f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("ids") {
  CHECK(io::parse_ids("") == std::vector<Vertex>{});
  CHECK(io::parse_ids("3,1,2") == std::vector<Vertex>{3, 1, 2});
  CHECK(io::format_ids({0, 4, 9}) == "0,4,9");
  CHECK(code_of([] { io::parse_ids("1,x"); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::parse_ids("-1"); }) == ErrorCode::Parse);
}

TEST_CASE("graph round trip and errors") {
  const Graph g = make_grid(3).graph();
  std::stringstream ss;
  io::write_graph(ss, g, {"grid"});
  CHECK(io::parse_graph(ss) == g);

  std::istringstream missing("e 0 1\n");
  CHECK(code_of([&] { io::parse_graph(missing); }) == ErrorCode::Parse);
  std::istringstream short_count("p graph 2 2\ne 0 1\n");
  CHECK(code_of([&] { io::parse_graph(short_count); }) == ErrorCode::Parse);
  std::istringstream garbage("p graph 2 1\nq 0 1\n");
  try {
    io::parse_graph(garbage);
    FAIL("garbage accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::istringstream loop("p graph 2 1\ne 1 1\n");
  try {
    io::parse_graph(loop);
    FAIL("loop accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find("loop") != std::string::npos);
  }
}

TEST_CASE("tangle files") {
  const GridGraph w = make_grid(2);
  Tangle t = natural_tangle(w);
  t.materialize();
  std::stringstream ss;
  io::write_tangle(ss, 2, t.members());
  const io::TangleFile f = io::parse_tangle(ss);
  CHECK(f.order == 2);
  CHECK(f.members == t.members());
  CHECK(check_axioms(w.graph(), io::load_tangle(w.graph(), f)).passed);

  std::istringstream natural("tangle order=3\nnatural r=3\n");
  const io::TangleFile nf = io::parse_tangle(natural);
  REQUIRE(nf.natural_r.has_value());
  CHECK(*nf.natural_r == 3);
  CHECK(code_of([&] { io::load_tangle(w.graph(), nf); }) == ErrorCode::Parse);

  CHECK(io::parse_separation("sep A=0,1 B=1,2") == Separation({0, 1}, {1, 2}));
  CHECK(code_of([] { io::parse_separation("sep A=0"); }) == ErrorCode::Parse);
}

TEST_CASE("model, rotation and vortex files") {
  const auto p = fixtures::pendant_w3();
  std::stringstream ms;
  io::write_model(ms, "w3.graph", p.model);
  const io::ModelFile mf = io::parse_model(ms);
  CHECK(mf.pattern_path == "w3.graph");
  CHECK(mf.branches.size() == 9);

  const RotationSystem k5 = fixtures::k5_rotation();
  std::stringstream rs;
  io::write_rotation(rs, k5);
  CHECK(io::parse_rotation(rs, k5.graph()) == std::vector<std::vector<Vertex>>{
                                                   k5.rotation(0), k5.rotation(1), k5.rotation(2), k5.rotation(3),
                                                   k5.rotation(4)});

  const auto c = fixtures::caterpillar();
  std::stringstream vs;
  io::write_vortex_certificate(vs, io::VortexCertificate{c.vortex.society, c.decomposition.bags, c.comb, {}});
  const io::VortexCertificate back = io::parse_vortex_certificate(vs);
  CHECK(back.society == c.vortex.society);
  CHECK(back.bags == c.decomposition.bags);
  REQUIRE(back.comb.has_value());
  CHECK(back.comb->spine == c.comb.spine);
  CHECK(back.comb->teeth() == c.comb.teeth());
}

TEST_CASE("certificate round trip") {
  const auto c = fixtures::composite();
  std::stringstream ss;
  io::write_certificate(ss, c.cert);
  const std::string first = ss.str();
  const NearEmbeddingCertificate back = io::parse_certificate(ss);
  CHECK(validate_certificate(c.graph, back).ok);
  std::stringstream again;
  io::write_certificate(again, back);
  CHECK(again.str() == first);

  std::istringstream none("apex:\n");
  CHECK(code_of([&] { io::parse_certificate(none); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::read_graph_file("/nonexistent/x.graph"); }) == ErrorCode::Parse);
}
