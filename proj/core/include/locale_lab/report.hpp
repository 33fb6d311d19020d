#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "locale_lab/classify.hpp"
#include "locale_lab/galois.hpp"
#include "locale_lab/io.hpp"

namespace lab {

struct AnalyzeOptions {
  Caps caps;
  bool suite_td = true;
  bool suite_totally_spatial = true;
  bool suite_scattered = true;
  bool suite_coframe = true;
  bool include_timings = true;
  WitnessPolicy witness_policy = WitnessPolicy::kFirstOnly;
};

struct PhaseInfo {
  std::string name;
  std::string status;  // "ok" | "skipped" | "failed"
  std::string detail;
  double ms = 0.0;
};

/// Diagnostics of the input space itself (for posets, of its Alexandroff
/// space). These are data about the input, not laws: false values here are
/// legitimate outcomes.
struct SpaceDiagnostics {
  bool t0 = false;
  bool sober = false;
  bool td = false;
  std::optional<bool> scattered;        // absent when the cap skipped it
  std::optional<bool> skula_discrete;   // absent when the cap skipped it
};

struct AnalysisReport {
  static constexpr int kSchemaVersion = 1;

  std::string input_name;
  std::string input_kind;  // "space" | "poset"
  int point_count = 0;
  int open_count = 0;

  std::optional<SpaceDiagnostics> space;
  int elements = 0;
  int prime_count = 0;
  bool spatial = false;
  std::optional<int> sublocale_count;
  std::string enumeration_backend;

  std::vector<DiagramReport> diagrams;
  std::vector<TheoremReport> suites;
  std::vector<PrimeDossier> dossiers;
  std::vector<PhaseInfo> phases;

  bool any_failure() const;
  bool any_skip() const;
  /// 0 all good, 1 a law failed, 3 something was skipped but nothing failed.
  int exit_code() const;

  nlohmann::ordered_json to_json(bool with_timings) const;
  std::string to_text() const;
};

AnalysisReport run_analyze(const ParsedInput& input,
                           const AnalyzeOptions& options = {});

struct RandomTrial {
  uint64_t seed = 0;
  int points = 0;
  double density = 0.0;
  bool passed = false;
};

struct RandomSuiteSummary {
  int trials = 0;
  int passed = 0;
  std::optional<RandomTrial> first_failure;
  std::vector<RandomTrial> all;

  bool all_passed() const { return passed == trials; }
  nlohmann::ordered_json to_json() const;
};

/// Runs the full analysis over `trials` random spaces derived from the base
/// seed. Failures are data, not exceptions; the first failing trial is
/// recorded verbatim for replay.
RandomSuiteSummary run_random_suite(int trials, int max_points, uint64_t seed,
                                    const AnalyzeOptions& options = {});

/// The parameters the random suite derives from a trial seed; exposed so a
/// reported failure can be replayed exactly.
RandomTrial random_trial_parameters(uint64_t trial_seed, int max_points);

}  // namespace lab
