#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tanglekit/grid.hpp"
#include "tanglekit/separation.hpp"

// The exhaustive desk-scale checks behind `verify-all`, one per criterion.
namespace tanglekit::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = true;
  std::int64_t checked = 0;
  double seconds = 0;
  std::vector<std::string> notes;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what);
};

struct VerifyOptions {
  int threads = 1;
  bool include_w4 = true;  // the r = 4 gridcut run
  std::uint64_t seed = 20261015;
};

struct GridcutReport {
  int r = 0;
  int max_order = 0;
  std::int64_t separations = 0;
  std::int64_t members = 0;
  std::vector<Separation> violations;  // members with |A| > order^2
};

// Every separation of W_r of order <= max_order (and < r) whose large side
// contains a cross must have |A| <= order^2.
GridcutReport gridcut(int r, std::optional<int> max_order = std::nullopt, int threads = 1);

CriterionResult gridcut_criterion(const VerifyOptions& o);
CriterionResult tangle_axioms_criterion(const VerifyOptions& o);
CriterionResult induced_separation_criterion(const VerifyOptions& o);
CriterionResult extended_tangle_criterion(const VerifyOptions& o);
CriterionResult menger_criterion(const VerifyOptions& o);
CriterionResult vortex_criterion(const VerifyOptions& o);
CriterionResult surface_criterion(const VerifyOptions& o);
CriterionResult euler_criterion(const VerifyOptions& o);
CriterionResult constants_criterion(const VerifyOptions& o);
CriterionResult near_embedding_criterion(const VerifyOptions& o);
CriterionResult hypotheses_criterion(const VerifyOptions& o);

std::vector<CriterionResult> run_all(const VerifyOptions& o);

}  // namespace tanglekit::verify
