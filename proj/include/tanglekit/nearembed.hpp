#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tanglekit/graph.hpp"
#include "tanglekit/minor.hpp"
#include "tanglekit/separation.hpp"
#include "tanglekit/surface.hpp"
#include "tanglekit/tangle.hpp"
#include "tanglekit/vortex.hpp"

namespace tanglekit {

// Exact fraction with positive denominator, for the inequalities below.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  std::string str() const;

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend bool operator==(Rational a, Rational b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(Rational a, Rational b);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

struct ConstantsProfile {
  std::int64_t a = 0;
  std::int64_t s = 0;
  std::int64_t k = 0;
  std::int64_t alpha = 0;
  std::int64_t theta = 0;
  std::int64_t n2 = 0;
  std::int64_t g = 0;   // (sk - 1) * binom(alpha, a)
  std::int64_t n1 = 0;  // least with n1/7 - 2(a+1)g - ask >= 3g + (n2-1)alpha
  std::int64_t r = 0;   // least with r >= theta, r > 3alpha, r^2 > (n1+g)(3alpha)^2 + n1
};

// Throws AlphaTooSmall when alpha <= 1, InvalidArgument on non-positive input.
ConstantsProfile compute_constants(std::int64_t a, std::int64_t s, std::int64_t k, std::int64_t alpha,
                                   std::int64_t theta, std::int64_t n2);

// Individual conditions, exposed so minimality can be checked from outside.
bool n1_condition(const ConstantsProfile& p, std::int64_t n1);
bool r_conditions(const ConstantsProfile& p, std::int64_t r);

struct LargeVortexCert {
  int label = 0;
  std::vector<Vertex> society;
  std::vector<VertexSet> bags;
  std::vector<Path> linkage;  // empty: use the linkage computed from the decomposition
  std::optional<Comb> comb;

  VertexSet vertices() const;
};

struct SmallVortexCert {
  int label = 0;
  VertexSet vertices;
  std::vector<Vertex> society;
};

struct DiscAssignment {
  int vortex_label = 0;
  int face = 0;
  std::optional<Dart> start;
  bool forward = true;
};

// All vertex ids are ids of the host graph G.
struct NearEmbeddingCertificate {
  VertexSet apex;
  VertexSet g0_vertices;
  std::vector<Edge> g0_edges;
  std::map<Vertex, std::vector<Vertex>> rotation;
  std::vector<DiscAssignment> discs;
  std::vector<LargeVortexCert> large_vortices;
  std::vector<SmallVortexCert> small_vortices;

  const LargeVortexCert& large_vortex(int label) const;
};

// G0 on local ids with its rotation system.
struct EmbeddedPart {
  Subgraph g0;
  RotationSystem rotation;
};

EmbeddedPart embedded_part(const NearEmbeddingCertificate& cert);

enum class CertViolationKind {
  UnknownVertex,
  ApexTooLarge,
  ApexInG0,
  ApexInVortex,
  G0EdgeNotInGraph,
  RotationInvalid,
  G0Disconnected,
  DuplicateLabel,
  VertexNotCovered,
  EdgeNotCovered,
  EdgeCoveredTwice,
  SocietyMismatch,
  VortexOverlap,
  TrivialVortex,
  TooManyLargeVortices,
  LargeVorticesIntersect,
  DecompositionInvalid,
  NotLinked,
  AdhesionTooLarge,
  LinkageInvalid,
  SmallVortexTooLong,
  CombMissing,
  CombOutsideVortex,
  CombInvalid,
  CombMeetsLinkage,
  DiscMissing,
  DiscInvalid,
  SocietyNotOnFace,
  InterleavedSocieties,
};

std::string_view to_string(CertViolationKind kind);

struct CertViolation {
  CertViolationKind kind;
  std::string message;
};

struct CertificateReport {
  bool ok = true;
  int checks = 0;
  std::vector<CertViolation> violations;

  const CertViolation* first() const { return violations.empty() ? nullptr : &violations.front(); }
  bool has(CertViolationKind kind) const;
};

struct ValidationOptions {
  std::optional<std::int64_t> alpha;  // bounds |A|, adhesion and large-vortex count when set
  CombOptions comb;
};

// Cover and overlap laws, then large vortices (disjoint, non-trivial, linked
// with adhesion <= alpha, comb), small vortices (length <= 3) and finally the
// disc assignment on the faces of G0.
CertificateReport validate_certificate(const Graph& g, const NearEmbeddingCertificate& cert,
                                       const ValidationOptions& options = {});
CertificateReport validate_certificate(const Graph& g, const NearEmbeddingCertificate& cert,
                                       const ConstantsProfile& profile);

struct RespectsViolation {
  Separation separation;  // host ids, apex included on both sides
  std::string container;
};

struct RespectsReport {
  bool ok = true;
  int separations_checked = 0;
  int members = 0;
  std::vector<RespectsViolation> violations;
};

struct RespectsOptions {
  EnumerationLimits limits;
  std::optional<int> max_order;
};

// No member of T \ A may have its large side inside a small vortex or a bag.
RespectsReport respects_check(const Graph& g, const NearEmbeddingCertificate& cert, const Tangle& t,
                              const RespectsOptions& options = {});

enum class NeighborCount {
  G0Edges,           // degree inside G0's own edge set
  HostEdgesWithinG0  // every G-edge with both ends in V(G0)
};

inline constexpr int kEssentialDegree = 7;

VertexSet essential_vertices(const NearEmbeddingCertificate& cert);
VertexSet essential_vertices(const Graph& g, const NearEmbeddingCertificate& cert, NeighborCount mode);

// Throws IndexOutOfRange if no large vortex carries the label.
bool is_m_wide(const NearEmbeddingCertificate& cert, int vortex_label, int m);

struct InequalityLine {
  std::string name;
  Rational lhs;
  std::string relation;  // "=", "<", "<=", ">", ">="
  Rational rhs;
  bool holds = false;
};

struct EulerReport {
  int vertices = 0;  // |G0|
  int edges = 0;     // ||G0||
  int faces = 0;     // l
  int euler_genus = 0;
  int x = 0;  // essential society vertices
  int y = 0;  // non-essential society vertices
  int z = 0;  // non-society vertices
  std::vector<InequalityLine> lines;

  const InequalityLine& line(const std::string& name) const;
};

EulerReport euler_report(const NearEmbeddingCertificate& cert, const ConstantsProfile& profile);

struct CountBounds {
  int vertices_with_many_apex_neighbours = 0;  // >= a neighbours in A
  int small_vortices = 0;
  std::int64_t bound = 0;  // g
  bool apex_bound_holds = false;
  bool small_vortex_bound_holds = false;
};

CountBounds count_bounds(const Graph& g, const NearEmbeddingCertificate& cert,
                                     const ConstantsProfile& profile);

struct PartCount {
  std::string part;  // "small <label>" or "bag <label>.<i>"
  Separation separation;
  int order = 0;
  int branch_sets = 0;
  bool member = false;  // of the extended natural tangle
  bool holds = false;   // branch_sets <= order^2
};

struct BranchCountReport {
  bool ok = true;
  std::vector<PartCount> parts;
  Rational aggregate_lhs;  // (n1 + g)(3 alpha)^2 + n1
  Rational aggregate_rhs;  // r^2
  bool aggregate_holds = false;
};

// `model` must be a model of some grid W_r in g.
BranchCountReport branch_count_check(const Graph& g, const NearEmbeddingCertificate& cert, const MinorModel& model,
                                     const ConstantsProfile& profile);

struct HypothesisReport {
  int kappa = 0;
  int delta = 0;
  int kappa_threshold = 0;   // 3a + 2
  Rational delta_threshold;  // 31(a+1)/2 - 3
  bool kappa_ok = false;
  bool delta_ok = false;
};

HypothesisReport check_hypotheses(const Graph& g, int a);

}  // namespace tanglekit
