#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "tanglekit/cli.hpp"
#include "tanglekit/io.hpp"

namespace fs = std::filesystem;

namespace {

const std::string data = TANGLEKIT_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;

  std::vector<std::string> lines() const {
    std::vector<std::string> v;
    std::istringstream in(out);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
  }
  int violations() const {
    int n = 0;
    for (const auto& l : lines()) n += l.rfind("VIOLATION", 0) == 0;
    return n;
  }
  std::string last() const { return lines().empty() ? "" : lines().back(); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = tanglekit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string d(const std::string& name) { return data + "/" + name; }

}  // namespace

TEST_CASE("exit codes") {
  const Run gridcut = run({"verify-gridcut", "--r", "3"});
  CHECK(gridcut.code == 0);
  CHECK(gridcut.last().rfind("RESULT verify-gridcut pass checked=", 0) == 0);

  const Run broken = run({"check-tangle", "--graph", d("w2.graph"), "--tangle", d("w2-broken-t1.tangle")});
  CHECK(broken.code == 1);
  CHECK(broken.violations() == 1);
  CHECK(broken.out.find("VIOLATION T1") != std::string::npos);
  CHECK(broken.last().rfind("RESULT check-tangle fail", 0) == 0);

  const Run doubled = run({"check-tangle", "--graph", d("w2.graph"), "--tangle", d("w2-doubled.tangle")});
  CHECK(doubled.code == 1);
  CHECK(doubled.out.find("VIOLATION T2") < doubled.out.find("VIOLATION T3"));

  CHECK(run({"--bogus-flag"}).code == 2);
  const Run early = run({"check-tangle", "--graph", "/nonexistent.graph", "--tangle", "/x", "--bogus"});
  CHECK(early.code == 2);
  CHECK(early.out.empty());
  CHECK(run({"check-tangle", "--graph", "/nonexistent.graph", "--tangle", "/x"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("subcommands on the data fixtures") {
  CHECK(run({"check-tangle", "--graph", d("w3.graph"), "--tangle", d("w3-natural.tangle")}).code == 0);
  CHECK(run({"check-model", "--host", d("pendant-w3.graph"), "--model", d("pendant-w3.model")}).code == 0);
  CHECK(run({"extend-tangle", "--host", d("pendant-w3.graph"), "--model", d("pendant-w3.model"), "--pattern-tangle",
             d("w3-natural.tangle"), "--check"})
            .code == 0);
  CHECK(run({"check-vortex", "--graph", d("caterpillar.graph"), "--cert", d("caterpillar.vortex")}).code == 0);
  const Run missing = run({"check-vortex", "--graph", d("caterpillar.graph"), "--cert", d("caterpillar-missing-w2.vortex")});
  CHECK(missing.code == 1);
  CHECK(missing.out.find("VIOLATION SocietyVertexNotInBag") != std::string::npos);
  CHECK(run({"check-vortex", "--graph", d("caterpillar.graph"), "--cert", d("caterpillar-reversed-comb.vortex")}).code == 1);
  CHECK(run({"check-vortex", "--graph", d("caterpillar.graph"), "--cert", d("caterpillar-reversed-comb.vortex"),
             "--allow-reversed-comb"})
            .code == 0);
  const Run cut = run({"check-vortex", "--graph", d("caterpillar-cut.graph"), "--cert", d("caterpillar.vortex")});
  CHECK(cut.code == 1);
  CHECK(cut.out.find("NoDisjointPathSystem") != std::string::npos);

  const Run genus = run({"genus", "--graph", d("k5.graph"), "--rotation", d("k5.rot")});
  CHECK(genus.code == 0);
  CHECK(genus.out.find("euler-genus=2") != std::string::npos);
  CHECK(run({"genus", "--graph", d("w3.graph"), "--rotation", d("w3.rot")}).out.find("euler-genus=0") != std::string::npos);

  CHECK(run({"check-near-embedding", "--graph", d("composite.graph"), "--cert", d("composite.cert")}).code == 0);
  const Run respects = run({"check-near-embedding", "--graph", d("composite.graph"), "--cert", d("composite-swollen.cert"),
                            "--model", d("composite.model"), "--pattern-tangle", d("w3-natural.tangle"), "--respects",
                            "--max-vertices", "20"});
  CHECK(respects.code == 1);
  CHECK(respects.out.find("VIOLATION Respects") != std::string::npos);
  const Run too_long = run({"check-near-embedding", "--graph", d("small-too-long.graph"), "--cert", d("small-too-long.cert")});
  CHECK(too_long.code == 1);
  CHECK(too_long.out.find("SmallVortexTooLong") != std::string::npos);

  CHECK(run({"wideness", "--graph", d("composite.graph"), "--cert", d("composite.cert"), "--vortex", "1", "--m", "4"}).code == 0);
  CHECK(run({"wideness", "--graph", d("composite.graph"), "--cert", d("composite.cert"), "--vortex", "1", "--m", "5"}).code == 1);
  CHECK(run({"wideness", "--graph", d("composite.graph"), "--cert", d("composite.cert"), "--vortex", "9", "--m", "1"}).code == 2);

  const Run constants = run({"constants", "--a", "1", "--s", "2", "--k", "1", "--alpha", "2", "--theta", "5", "--n2", "1"});
  CHECK(constants.code == 0);
  CHECK(constants.out.find("n1=112") != std::string::npos);
  CHECK(constants.out.find("r=65") != std::string::npos);
  CHECK(run({"constants", "--a", "1", "--s", "1", "--k", "1", "--alpha", "1", "--theta", "5", "--n2", "1"}).code == 2);

  CHECK(run({"check-hypotheses", "--graph", d("k6.graph"), "--a", "1"}).code == 1);
  CHECK(run({"check-hypotheses", "--graph", d("k29.graph"), "--a", "1"}).code == 0);
}

TEST_CASE("files written by the CLI") {
  const fs::path dir = fs::temp_directory_path() / "tanglekit-cli-test";
  fs::create_directories(dir);
  CHECK(run({"grid", "--r", "2", "--out", (dir / "w2.graph").string()}).code == 0);
  CHECK(tanglekit::io::read_graph_file(dir / "w2.graph") == tanglekit::make_grid(2).graph());
  CHECK(run({"natural-tangle", "--r", "2", "--materialize", "--out", (dir / "w2.tangle").string()}).code == 0);
  CHECK(run({"check-tangle", "--graph", (dir / "w2.graph").string(), "--tangle", (dir / "w2.tangle").string()}).code == 0);
  fs::remove_all(dir);
}

TEST_CASE("output does not depend on the worker count") {
  const std::vector<std::vector<std::string>> cases{
      {"enum-seps", "--graph", d("w3.graph"), "--max-order", "2"},
      {"check-near-embedding", "--graph", d("composite.graph"), "--cert", d("composite-swollen.cert"), "--model",
       d("composite.model"), "--pattern-tangle", d("w3-natural.tangle"), "--respects", "--max-vertices", "20"},
      {"verify-all", "--skip-w4"},
  };
  for (auto args : cases) {
    auto one = args, four = args;
    one.insert(one.end(), {"--threads", "1"});
    four.insert(four.end(), {"--threads", "4"});
    const Run a = run(one), b = run(four);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("thread environment fallback") {
  setenv("TANGLEKIT_THREADS", "3", 1);
  CHECK(run({"enum-seps", "--graph", d("w2.graph"), "--max-order", "1"}).code == 0);
  setenv("TANGLEKIT_THREADS", "lots", 1);
  CHECK(run({"enum-seps", "--graph", d("w2.graph"), "--max-order", "1"}).code == 2);
  unsetenv("TANGLEKIT_THREADS");
  CHECK(run({"enum-seps", "--graph", d("w2.graph"), "--max-order", "1", "--threads", "0"}).code == 2);
}
