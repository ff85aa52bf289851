#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tanglekit/graph.hpp"
#include "tanglekit/minor.hpp"
#include "tanglekit/nearembed.hpp"
#include "tanglekit/separation.hpp"
#include "tanglekit/surface.hpp"
#include "tanglekit/tangle.hpp"
#include "tanglekit/vortex.hpp"

// Line-oriented text formats. Parsers throw Error(ErrorCode::Parse) with the
// offending line number; ids are checked against the graph where one is given.
namespace tanglekit::io {

std::vector<Vertex> parse_ids(const std::string& text);  // "1,2,3"; empty text -> {}
std::string format_ids(const std::vector<Vertex>& ids);

Graph parse_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {});

Separation parse_separation(const std::string& line);

// `tangle order=<t>` then `sep` lines, or `natural r=<R>` for the natural
// tangle of W_R (predicate-backed; the ground graph must be W_R).
struct TangleFile {
  int order = 0;
  std::vector<Separation> members;
  std::optional<int> natural_r;
};

TangleFile parse_tangle(std::istream& in);
Tangle load_tangle(const Graph& g, const TangleFile& file);
void write_tangle(std::ostream& out, int order, const std::vector<Separation>& members);

// `model pattern=<file>` (relative to the model file) then `branch h: ids`.
struct ModelFile {
  std::string pattern_path;
  std::vector<std::pair<Vertex, VertexSet>> branches;
};

ModelFile parse_model(std::istream& in);
MinorModel load_model(const Graph& host, const std::filesystem::path& model_path);
void write_model(std::ostream& out, const std::string& pattern_path, const MinorModel& m);

// `rot v: ids`
std::vector<std::vector<Vertex>> parse_rotation(std::istream& in, const Graph& g);
void write_rotation(std::ostream& out, const RotationSystem& rs);

struct VortexCertificate {
  std::vector<Vertex> society;
  std::vector<VertexSet> bags;
  std::optional<Comb> comb;
  std::vector<Path> linkage;
};

VortexCertificate parse_vortex_certificate(std::istream& in);
void write_vortex_certificate(std::ostream& out, const VortexCertificate& c);

NearEmbeddingCertificate parse_certificate(std::istream& in);
void write_certificate(std::ostream& out, const NearEmbeddingCertificate& c);

// File helpers; throw Error(Parse) when the file cannot be opened.
Graph read_graph_file(const std::filesystem::path& p);
std::string read_text_file(const std::filesystem::path& p);

}  // namespace tanglekit::io
