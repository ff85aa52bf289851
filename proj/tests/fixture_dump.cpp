// Writes the shared fixtures as text files: fixture_dump <dir>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "tanglekit/fixtures.hpp"
#include "tanglekit/io.hpp"

using namespace tanglekit;
namespace fs = std::filesystem;

namespace {

fs::path dir;

std::ofstream open(const std::string& name) {
  std::ofstream f(dir / name, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + name);
  return f;
}

void graph(const std::string& name, const Graph& g) {
  auto f = open(name);
  io::write_graph(f, g);
}

void vortex(const std::string& name, const fixtures::Caterpillar& c, const Comb& comb) {
  auto f = open(name);
  io::write_vortex_certificate(f, io::VortexCertificate{c.vortex.society, c.decomposition.bags, comb, {}});
}

void cert(const std::string& name, const NearEmbeddingCertificate& c) {
  auto f = open(name);
  io::write_certificate(f, c);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: fixture_dump <dir>\n";
    return 2;
  }
  dir = argv[1];
  fs::create_directories(dir);

  const GridGraph w2 = make_grid(2);
  const GridGraph w3 = make_grid(3);
  graph("w2.graph", w2.graph());
  graph("w3.graph", w3.graph());
  {
    auto f = open("w3-natural.tangle");
    f << "tangle order=3\nnatural r=3\n";
  }
  {
    Tangle t = natural_tangle(w2);
    t.materialize();
    auto f = open("w2-natural.tangle");
    io::write_tangle(f, 2, t.members());
    std::vector<Separation> dropped = t.members();
    std::erase(dropped, Separation({w2.id(1, 1)}, w2.graph().all_vertices()));
    auto broken = open("w2-broken-t1.tangle");
    io::write_tangle(broken, 2, dropped);
    std::vector<Separation> doubled = t.members();
    doubled.push_back(Separation(w2.graph().all_vertices(), {w2.id(1, 1)}));
    auto d = open("w2-doubled.tangle");
    io::write_tangle(d, 2, doubled);
  }
  {
    const auto p = fixtures::pendant_w3();
    graph("pendant-w3.graph", p.host);
    auto f = open("pendant-w3.model");
    io::write_model(f, "w3.graph", p.model);
  }

  const auto cat = fixtures::caterpillar();
  graph("caterpillar.graph", cat.vortex.graph);
  graph("caterpillar-cut.graph", fixtures::caterpillar_without_edge_u2u3().vortex.graph);
  vortex("caterpillar.vortex", cat, cat.comb);
  vortex("caterpillar-missing-w2.vortex", fixtures::caterpillar_missing_w2_in_x2(), cat.comb);
  vortex("caterpillar-permuted-bags.vortex", fixtures::caterpillar_bags_permuted(), cat.comb);
  vortex("caterpillar-reversed-comb.vortex", cat, fixtures::caterpillar_comb_reversed());

  {
    const RotationSystem k5 = fixtures::k5_rotation();
    graph("k5.graph", k5.graph());
    auto f = open("k5.rot");
    io::write_rotation(f, k5);
    auto g = open("w3.rot");
    io::write_rotation(g, fixtures::planar_grid_rotation(w3));
  }

  const auto c = fixtures::composite();
  graph("composite.graph", c.graph);
  cert("composite.cert", c.cert);
  cert("composite-swollen.cert", fixtures::swollen_small_vortex(c));
  {
    auto f = open("composite.model");
    io::write_model(f, "w3.graph", c.model);
  }
  const auto tl = fixtures::small_vortex_too_long();
  graph("small-too-long.graph", tl.graph);
  cert("small-too-long.cert", tl.cert);
  cert("trivial.cert", fixtures::trivial_certificate().cert);
  graph("k6.graph", fixtures::complete_graph(6));
  graph("k29.graph", fixtures::complete_graph(29));
  return 0;
}
