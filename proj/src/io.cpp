#include "tanglekit/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace tanglekit::io {

namespace {

struct Line {
  int number;
  std::string text;
};

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    std::string t = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (!t.empty()) out.push_back({number, std::move(t)});
  }
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

bool to_int(std::string_view s, long long& out) {
  s = std::string_view(s.data(), s.size());
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

int int_at(const Line& line, std::string_view s, const char* what) {
  long long v = 0;
  if (!to_int(trim(s), v) || v < INT32_MIN || v > INT32_MAX) {
    parse_error(line.number, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return static_cast<int>(v);
}

std::vector<Vertex> ids_at(const Line& line, const std::string& text) {
  try {
    return parse_ids(text);
  } catch (const Error& e) {
    parse_error(line.number, e.what());
  }
}

// "head: tail" -> (head, tail); nullopt if no colon.
std::optional<std::pair<std::string, std::string>> split_colon(const std::string& s) {
  const auto c = s.find(':');
  if (c == std::string::npos) return std::nullopt;
  return std::make_pair(trim(s.substr(0, c)), trim(s.substr(c + 1)));
}

// "key=value" with a fixed key.
std::optional<std::string> keyed(const std::string& word, std::string_view key) {
  if (word.size() < key.size() + 1 || word.compare(0, key.size(), key) != 0 || word[key.size()] != '=') {
    return std::nullopt;
  }
  return word.substr(key.size() + 1);
}

// "rot 5" -> 5 given keyword "rot".
std::optional<int> indexed_head(const Line& line, const std::string& head, std::string_view keyword) {
  const auto w = words(head);
  if (w.empty() || w[0] != keyword) return std::nullopt;
  if (w.size() != 2) parse_error(line.number, "expected '" + std::string(keyword) + " <index>:'");
  return int_at(line, w[1], "index");
}

}  // namespace

std::vector<Vertex> parse_ids(const std::string& text) {
  std::vector<Vertex> out;
  const std::string t = trim(text);
  if (t.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = t.find(',', start);
    const std::string item = trim(t.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    long long v = 0;
    if (!to_int(item, v) || v < 0 || v > INT32_MAX) throw Error(ErrorCode::Parse, "bad vertex id '" + item + "'");
    out.push_back(static_cast<Vertex>(v));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_ids(const std::vector<Vertex>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ids[i]);
  }
  return out;
}

// --- graph

Graph parse_graph(std::istream& in) {
  const auto lines = read_lines(in);
  int n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  for (const Line& line : lines) {
    const auto w = words(line.text);
    if (w[0] == "p") {
      if (n >= 0) parse_error(line.number, "duplicate problem line");
      if (w.size() != 4 || w[1] != "graph") parse_error(line.number, "expected 'p graph <n> <m>'");
      n = int_at(line, w[2], "vertex count");
      m = int_at(line, w[3], "edge count");
      if (n < 0 || m < 0) parse_error(line.number, "negative count");
    } else if (w[0] == "e") {
      if (n < 0) parse_error(line.number, "edge before problem line");
      if (w.size() != 3) parse_error(line.number, "expected 'e <u> <v>'");
      const int u = int_at(line, w[1], "vertex");
      const int v = int_at(line, w[2], "vertex");
      if (u < 0 || v < 0 || u >= n || v >= n) parse_error(line.number, "vertex out of range");
      if (u == v) parse_error(line.number, "loop edge");
      edges.push_back(Edge{u, v});
    } else {
      parse_error(line.number, "unknown line '" + line.text + "'");
    }
  }
  if (n < 0) throw Error(ErrorCode::Parse, "missing 'p graph' line");
  if (static_cast<long long>(edges.size()) != m) {
    throw Error(ErrorCode::Parse, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph(n, edges);
}

void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
  out << "p graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& c : comments) out << "# " << c << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

// --- separations and tangles

Separation parse_separation(const std::string& text) {
  const auto w = words(text);
  if (w.size() != 3 || w[0] != "sep") throw Error(ErrorCode::Parse, "expected 'sep A=<ids> B=<ids>'");
  const auto a = keyed(w[1], "A");
  const auto b = keyed(w[2], "B");
  if (!a || !b) throw Error(ErrorCode::Parse, "expected 'sep A=<ids> B=<ids>'");
  return Separation(parse_ids(*a), parse_ids(*b));
}

TangleFile parse_tangle(std::istream& in) {
  const auto lines = read_lines(in);
  if (lines.empty()) throw Error(ErrorCode::Parse, "empty tangle file");
  TangleFile f;
  {
    const auto w = words(lines[0].text);
    const auto order = w.size() == 2 && w[0] == "tangle" ? keyed(w[1], "order") : std::nullopt;
    if (!order) parse_error(lines[0].number, "expected 'tangle order=<t>'");
    f.order = int_at(lines[0], *order, "order");
    if (f.order < 1) parse_error(lines[0].number, "order must be positive");
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const auto w = words(line.text);
    if (w[0] == "natural") {
      const auto r = w.size() == 2 ? keyed(w[1], "r") : std::nullopt;
      if (!r) parse_error(line.number, "expected 'natural r=<R>'");
      f.natural_r = int_at(line, *r, "grid size");
      continue;
    }
    try {
      f.members.push_back(parse_separation(line.text));
    } catch (const Error& e) {
      parse_error(line.number, e.what());
    }
  }
  if (f.natural_r && !f.members.empty()) throw Error(ErrorCode::Parse, "'natural' cannot be mixed with sep lines");
  return f;
}

Tangle load_tangle(const Graph& g, const TangleFile& file) {
  if (file.natural_r) {
    if (*file.natural_r < 1) throw Error(ErrorCode::Parse, "grid size must be positive");
    const GridGraph w = make_grid(*file.natural_r);
    if (!(w.graph() == g)) throw Error(ErrorCode::Parse, "natural tangle needs the graph to be the grid W_" + std::to_string(*file.natural_r));
    if (file.order != w.r()) throw Error(ErrorCode::Parse, "natural tangle of W_r has order r");
    return natural_tangle(w);
  }
  for (const Separation& s : file.members) {
    for (const auto* side : {&s.side_a(), &s.side_b()}) {
      for (Vertex v : *side) {
        if (!g.has_vertex(v)) throw Error(ErrorCode::Parse, "tangle names vertex " + std::to_string(v) + " not in the graph");
      }
    }
  }
  return Tangle::from_members(g, file.order, file.members);
}

void write_tangle(std::ostream& out, int order, const std::vector<Separation>& members) {
  out << "tangle order=" << order << '\n';
  for (const Separation& s : members) out << format_separation(s) << '\n';
}

// --- models

ModelFile parse_model(std::istream& in) {
  const auto lines = read_lines(in);
  if (lines.empty()) throw Error(ErrorCode::Parse, "empty model file");
  ModelFile f;
  {
    const auto w = words(lines[0].text);
    const auto p = w.size() == 2 && w[0] == "model" ? keyed(w[1], "pattern") : std::nullopt;
    if (!p || p->empty()) parse_error(lines[0].number, "expected 'model pattern=<graph-file>'");
    f.pattern_path = *p;
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const auto parts = split_colon(line.text);
    const auto h = parts ? indexed_head(line, parts->first, "branch") : std::nullopt;
    if (!h) parse_error(line.number, "expected 'branch <h>: <ids>'");
    f.branches.emplace_back(*h, make_set(ids_at(line, parts->second)));
  }
  return f;
}

MinorModel load_model(const Graph& host, const std::filesystem::path& model_path) {
  std::istringstream in(read_text_file(model_path));
  const ModelFile f = parse_model(in);
  std::filesystem::path pattern_path(f.pattern_path);
  if (pattern_path.is_relative()) pattern_path = model_path.parent_path() / pattern_path;
  MinorModel m{host, read_graph_file(pattern_path), {}};
  m.branch_sets.resize(static_cast<std::size_t>(m.pattern.vertex_count()));
  std::set<Vertex> seen;
  for (const auto& [h, set] : f.branches) {
    if (!m.pattern.has_vertex(h)) throw Error(ErrorCode::Parse, "branch for unknown pattern vertex " + std::to_string(h));
    if (!seen.insert(h).second) throw Error(ErrorCode::Parse, "duplicate branch " + std::to_string(h));
    m.branch_sets[static_cast<std::size_t>(h)] = set;
  }
  return m;
}

void write_model(std::ostream& out, const std::string& pattern_path, const MinorModel& m) {
  out << "model pattern=" << pattern_path << '\n';
  for (std::size_t h = 0; h < m.branch_sets.size(); ++h) {
    out << "branch " << h << ": " << format_ids(m.branch_sets[h]) << '\n';
  }
}

// --- rotations

std::vector<std::vector<Vertex>> parse_rotation(std::istream& in, const Graph& g) {
  std::vector<std::vector<Vertex>> rotation(static_cast<std::size_t>(g.vertex_count()));
  std::vector<bool> seen(rotation.size(), false);
  for (const Line& line : read_lines(in)) {
    const auto parts = split_colon(line.text);
    const auto v = parts ? indexed_head(line, parts->first, "rot") : std::nullopt;
    if (!v) parse_error(line.number, "expected 'rot <v>: <ids>'");
    if (!g.has_vertex(*v)) parse_error(line.number, "vertex " + std::to_string(*v) + " not in the graph");
    if (seen[static_cast<std::size_t>(*v)]) parse_error(line.number, "duplicate rotation for " + std::to_string(*v));
    seen[static_cast<std::size_t>(*v)] = true;
    rotation[static_cast<std::size_t>(*v)] = ids_at(line, parts->second);
  }
  return rotation;
}

void write_rotation(std::ostream& out, const RotationSystem& rs) {
  for (Vertex v = 0; v < rs.graph().vertex_count(); ++v) out << "rot " << v << ": " << format_ids(rs.rotation(v)) << '\n';
}

// --- vortex blocks (shared by the vortex and near-embedding formats)

namespace {

// Returns false if the line is not a vortex-block line.
bool vortex_line(const Line& line, VortexCertificate& c, bool& has_society) {
  const auto w = words(line.text);
  if (w[0] == "vortex") {
    const auto s = w.size() == 2 ? keyed(w[1], "society") : std::nullopt;
    if (!s) parse_error(line.number, "expected 'vortex society=<ids>'");
    if (has_society) parse_error(line.number, "duplicate society");
    c.society = ids_at(line, *s);
    has_society = true;
    return true;
  }
  const auto parts = split_colon(line.text);
  if (!parts) return false;
  const auto& [head, tail] = *parts;
  if (const auto i = indexed_head(line, head, "bag")) {
    if (*i != static_cast<int>(c.bags.size()) + 1) parse_error(line.number, "bags must be numbered 1, 2, ... in order");
    c.bags.push_back(make_set(ids_at(line, tail)));
    return true;
  }
  if (head == "spine") {
    if (c.comb) parse_error(line.number, "duplicate spine");
    c.comb = Comb{Path(ids_at(line, tail)), {}};
    return true;
  }
  if (head == "tooth") {
    if (!c.comb) parse_error(line.number, "tooth before spine");
    c.comb->teeth_paths.emplace_back(ids_at(line, tail));
    return true;
  }
  if (head == "linkpath") {
    c.linkage.emplace_back(ids_at(line, tail));
    return true;
  }
  return false;
}

void write_vortex_lines(std::ostream& out, const std::vector<Vertex>& society, const std::vector<VertexSet>& bags,
                        const std::optional<Comb>& comb, const std::vector<Path>& linkage, const char* indent) {
  out << indent << "vortex society=" << format_ids(society) << '\n';
  for (std::size_t i = 0; i < bags.size(); ++i) out << indent << "bag " << i + 1 << ": " << format_ids(bags[i]) << '\n';
  if (comb) {
    out << indent << "spine: " << format_ids(comb->spine.vertices()) << '\n';
    for (const Path& p : comb->teeth_paths) out << indent << "tooth: " << format_ids(p.vertices()) << '\n';
  }
  for (const Path& p : linkage) out << indent << "linkpath: " << format_ids(p.vertices()) << '\n';
}

}  // namespace

VortexCertificate parse_vortex_certificate(std::istream& in) {
  VortexCertificate c;
  bool has_society = false;
  for (const Line& line : read_lines(in)) {
    if (!vortex_line(line, c, has_society)) parse_error(line.number, "unknown line '" + line.text + "'");
  }
  if (!has_society) throw Error(ErrorCode::Parse, "missing 'vortex society=' line");
  return c;
}

void write_vortex_certificate(std::ostream& out, const VortexCertificate& c) {
  write_vortex_lines(out, c.society, c.bags, c.comb, c.linkage, "");
}

// --- near-embedding certificates

NearEmbeddingCertificate parse_certificate(std::istream& in) {
  NearEmbeddingCertificate cert;
  enum class Block { Top, G0Edges, Large, Small } block = Block::Top;
  bool large_has_society = false;
  VortexCertificate large;
  bool small_has_vertices = false;
  bool small_has_society = false;
  bool has_apex = false;
  bool has_g0 = false;

  auto close = [&](int number) {
    if (block == Block::Large) {
      if (!large_has_society) parse_error(number, "largevortex block without 'vortex society=' line");
      auto& lv = cert.large_vortices.back();
      lv.society = large.society;
      lv.bags = large.bags;
      lv.comb = large.comb;
      lv.linkage = large.linkage;
    }
    if (block == Block::Small && (!small_has_vertices || !small_has_society)) {
      parse_error(number, "smallvortex block needs 'vertices:' and 'society:' lines");
    }
    block = Block::Top;
  };

  const auto lines = read_lines(in);
  for (const Line& line : lines) {
    const auto w = words(line.text);
    if (w[0] == "largevortex" || w[0] == "smallvortex") {
      close(line.number);
      if (w.size() != 2) parse_error(line.number, "expected '" + w[0] + " <label>'");
      const int label = int_at(line, w[1], "label");
      if (w[0] == "largevortex") {
        cert.large_vortices.push_back(LargeVortexCert{label, {}, {}, {}, std::nullopt});
        large = VortexCertificate{};
        large_has_society = false;
        block = Block::Large;
      } else {
        cert.small_vortices.push_back(SmallVortexCert{label, {}, {}});
        small_has_vertices = small_has_society = false;
        block = Block::Small;
      }
      continue;
    }
    if (w[0] == "e") {
      if (block != Block::G0Edges) parse_error(line.number, "'e' line outside g0-edges");
      if (w.size() != 3) parse_error(line.number, "expected 'e <u> <v>'");
      const int u = int_at(line, w[1], "vertex");
      const int v = int_at(line, w[2], "vertex");
      if (u == v) parse_error(line.number, "loop edge");
      cert.g0_edges.push_back(Edge{std::min(u, v), std::max(u, v)});
      continue;
    }
    if (block == Block::Large && vortex_line(line, large, large_has_society)) continue;
    const auto parts = split_colon(line.text);
    if (!parts) parse_error(line.number, "unknown line '" + line.text + "'");
    const auto& [head, tail] = *parts;
    if (block == Block::Small && (head == "vertices" || head == "society")) {
      auto& sv = cert.small_vortices.back();
      bool& flag = head == "vertices" ? small_has_vertices : small_has_society;
      if (flag) parse_error(line.number, "duplicate '" + head + ":' line");
      flag = true;
      if (head == "vertices") {
        sv.vertices = make_set(ids_at(line, tail));
      } else {
        sv.society = ids_at(line, tail);
      }
      continue;
    }
    if (head == "apex") {
      close(line.number);
      if (has_apex) parse_error(line.number, "duplicate apex line");
      has_apex = true;
      cert.apex = make_set(ids_at(line, tail));
    } else if (head == "g0-vertices") {
      close(line.number);
      if (has_g0) parse_error(line.number, "duplicate g0-vertices line");
      has_g0 = true;
      cert.g0_vertices = make_set(ids_at(line, tail));
    } else if (head == "g0-edges") {
      close(line.number);
      if (!tail.empty()) parse_error(line.number, "edges follow on 'e' lines");
      block = Block::G0Edges;
    } else if (const auto v = indexed_head(line, head, "rot")) {
      close(line.number);
      if (!cert.rotation.emplace(*v, ids_at(line, tail)).second) {
        parse_error(line.number, "duplicate rotation for " + std::to_string(*v));
      }
    } else if (const auto label = indexed_head(line, head, "disc")) {
      close(line.number);
      DiscAssignment d;
      d.vortex_label = *label;
      bool has_face = false;
      bool has_dir = false;
      for (const auto& item : words(tail)) {
        if (const auto f = keyed(item, "face")) {
          d.face = int_at(line, *f, "face");
          has_face = true;
        } else if (const auto s = keyed(item, "start")) {
          const auto colon = s->find(':');
          if (colon == std::string::npos) parse_error(line.number, "start dart must be 'u:v'");
          d.start = Dart{int_at(line, s->substr(0, colon), "vertex"), int_at(line, s->substr(colon + 1), "vertex")};
        } else if (const auto dir = keyed(item, "dir")) {
          if (*dir != "+" && *dir != "-") parse_error(line.number, "dir must be + or -");
          d.forward = *dir == "+";
          has_dir = true;
        } else {
          parse_error(line.number, "unknown disc field '" + item + "'");
        }
      }
      if (!has_face || !has_dir) parse_error(line.number, "disc needs face= and dir=");
      cert.discs.push_back(d);
    } else {
      parse_error(line.number, "unknown line '" + line.text + "'");
    }
  }
  close(lines.empty() ? 0 : lines.back().number + 1);
  if (!has_g0) throw Error(ErrorCode::Parse, "missing g0-vertices line");
  return cert;
}

void write_certificate(std::ostream& out, const NearEmbeddingCertificate& c) {
  out << "apex: " << format_ids(c.apex) << '\n';
  out << "g0-vertices: " << format_ids(c.g0_vertices) << '\n';
  out << "g0-edges:\n";
  for (const Edge& e : c.g0_edges) out << "e " << e.u << ' ' << e.v << '\n';
  for (const auto& [v, cyc] : c.rotation) out << "rot " << v << ": " << format_ids(cyc) << '\n';
  for (const auto& d : c.discs) {
    out << "disc " << d.vortex_label << ": face=" << d.face;
    if (d.start) out << " start=" << d.start->tail << ':' << d.start->head;
    out << " dir=" << (d.forward ? '+' : '-') << '\n';
  }
  for (const auto& lv : c.large_vortices) {
    out << "largevortex " << lv.label << '\n';
    write_vortex_lines(out, lv.society, lv.bags, lv.comb, lv.linkage, "  ");
  }
  for (const auto& sv : c.small_vortices) {
    out << "smallvortex " << sv.label << '\n';
    out << "  vertices: " << format_ids(sv.vertices) << '\n';
    out << "  society: " << format_ids(sv.society) << '\n';
  }
}

// --- files

std::string read_text_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Graph read_graph_file(const std::filesystem::path& p) {
  std::istringstream in(read_text_file(p));
  try {
    return parse_graph(in);
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, p.string() + ": " + e.what());
  }
}

}  // namespace tanglekit::io
