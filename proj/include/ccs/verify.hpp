#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccs/automorphism.hpp"
#include "ccs/report.hpp"
#include "ccs/schur_ring.hpp"
#include "ccs/serialize.hpp"

namespace ccs {

struct VerifyOptions {
  int p = 5;
  PaperGroupOptions group;
  /// Verify the fusion scheme of this level instead of the full scheme.
  std::optional<FusionLevel> fusion;
  /// Run only this stage; empty runs all of them.
  std::string lemma;
  long long budget = kDefaultSearchBudget;
};

struct StageResult {
  std::string name;
  std::string title;
  Report report;
  bool inconclusive = false;  // a search ran out of budget
  std::string error;          // message of the exception that ended the stage
  double seconds = 0;
  /// Headline values for the summary, in insertion order.
  std::vector<std::pair<std::string, Json>> facts;
  /// Stage output worth its own file (the separability audit).
  std::optional<Json> artifact;

  bool passed() const { return !inconclusive && error.empty() && report.ok(); }
};

struct VerifyResult {
  std::vector<StageResult> stages;

  bool passed() const;
  /// No stage failed outright, but at least one ran out of budget.
  bool inconclusive() const;
};

/// Stage names for the full scheme, in execution order.
const std::vector<std::string>& stage_names();
/// Stage names when a fusion level is selected.
const std::vector<std::string>& fusion_stage_names();

/// Throws std::invalid_argument for a bad prime, unknown stage name, or
/// inconsistent group options.
VerifyResult run_verification(const VerifyOptions& options,
                              const std::function<void(const StageResult&)>& on_stage = {});

/// Config, version, per-stage checks and facts. Timings only when asked, so
/// that reports of identical runs are byte-identical by default.
Json verification_to_json(const VerifyResult& result, const VerifyOptions& options, bool include_timings = false);

/// `count` automorphisms of G from GL(2,2) x GL(2,p), picked by a fixed
/// stride through the lexicographic lists of invertible matrices.
std::vector<std::pair<std::array<int, 4>, std::array<int, 4>>> sample_linear_automorphisms(int p, int count);

/// Expected number of involutions of each candidate group of order 4p^2.
int expected_involutions(CandidateKind kind, int p);

}  // namespace ccs
