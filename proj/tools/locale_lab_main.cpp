#include <CLI11.hpp>
#include <iostream>

#include "locale_lab/cofinite.hpp"
#include "locale_lab/errors.hpp"
#include "locale_lab/report.hpp"

namespace {

struct CommonFlags {
  bool json = false;
  bool no_timings = false;
  lab::AnalyzeOptions options;
};

void add_cap_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_flag("--json", f.json, "emit the structured report");
  cmd->add_flag("--no-timings", f.no_timings,
                "omit timing fields from the structured report");
  cmd->add_flag_callback(
      "--all-witnesses",
      [&f] { f.options.witness_policy = lab::WitnessPolicy::kCollectAll; },
      "collect every failing input per law instead of the first");
  cmd->add_option("--max-elements", f.options.caps.max_elements,
                  "lattice element cap");
  cmd->add_option("--max-assembly", f.options.caps.max_enumeration,
                  "subset-filter sublocale enumeration cap");
  cmd->add_option("--max-subsets", f.options.caps.max_exhaustive_primes,
                  "exhaustive prime-subset quantification cap");
  cmd->add_option("--threads", f.options.caps.threads,
                  "worker threads (default: LOCALE_LAB_THREADS or hardware)");
}

int emit_analysis(const lab::AnalysisReport& report, const CommonFlags& f) {
  if (f.json)
    std::cout << report.to_json(!f.no_timings).dump(2) << "\n";
  else
    std::cout << report.to_text();
  return report.exit_code();
}

int run_analyze_command(const std::string& path, const CommonFlags& f) {
  lab::ParsedInput input = lab::parse_input(path);
  return emit_analysis(lab::run_analyze(input, f.options), f);
}

int run_random_command(int trials, int max_points, uint64_t seed,
                       const CommonFlags& f) {
  lab::RandomSuiteSummary summary =
      lab::run_random_suite(trials, max_points, seed, f.options);
  if (f.json) {
    std::cout << summary.to_json().dump(2) << "\n";
  } else {
    std::cout << "random suite: " << summary.passed << "/" << summary.trials
              << " trials passed\n";
    if (summary.first_failure)
      std::cout << "first failure: seed=" << summary.first_failure->seed
                << " points=" << summary.first_failure->points
                << " density=" << summary.first_failure->density << "\n";
  }
  return summary.all_passed() ? 0 : 1;
}

int run_replay_command(uint64_t seed, int max_points, const CommonFlags& f) {
  lab::RandomTrial t = lab::random_trial_parameters(seed, max_points);
  lab::FiniteSpace X =
      lab::random_space(t.points, t.seed, t.density, f.options.caps);
  lab::ParsedInput in{"random", X};
  return emit_analysis(lab::run_analyze(in, f.options), f);
}

int run_cofinite_command(int range, const CommonFlags& f) {
  lab::CofiniteClassification c = lab::cf_classification();
  bool oracle = lab::cf_adjunction_exhaustive(range);
  if (f.json) {
    nlohmann::ordered_json j;
    j["schema_version"] = lab::AnalysisReport::kSchemaVersion;
    j["family"] = "cofinite frame on a countably infinite carrier";
    j["verdicts"] = {{"totally_spatial", c.totally_spatial.holds},
                     {"td", c.td.holds},
                     {"scattered", c.scattered.holds}};
    j["witnesses"] = {{"td", c.td.holds ? "" : c.td.witness},
                      {"scattered", c.scattered.holds ? "" : c.scattered.witness}};
    j["implication_consistent"] = c.implication_consistent;
    j["adjunction_oracle_range"] = range;
    j["adjunction_oracle_ok"] = oracle;
    nlohmann::ordered_json certs = nlohmann::ordered_json::array();
    for (const lab::CofiniteFact& fact : c.certificates)
      certs.push_back({{"statement", fact.statement},
                       {"holds", fact.holds},
                       {"certificate", fact.certificate}});
    j["certificates"] = std::move(certs);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "cofinite frame classification\n";
    std::cout << "  totally spatial: " << (c.totally_spatial.holds ? "yes" : "no")
              << "\n";
    std::cout << "  T_D:             " << (c.td.holds ? "yes" : "no")
              << (c.td.holds ? "" : "  (witness: " + c.td.witness + ")")
              << "\n";
    std::cout << "  scattered:       " << (c.scattered.holds ? "yes" : "no")
              << (c.scattered.holds
                      ? ""
                      : "  (witness: " + c.scattered.witness + ")")
              << "\n";
    std::cout << "  scattered iff totally spatial and all primes weakly "
                 "covered: "
              << (c.implication_consistent ? "consistent" : "INCONSISTENT")
              << "\n";
    std::cout << "  adjunction oracle (complements in 0.." << range - 1
              << "): " << (oracle ? "ok" : "FAILED") << "\n";
    for (const lab::CofiniteFact& fact : c.certificates)
      std::cout << "  fact: " << fact.statement << " ["
                << (fact.holds ? "certified" : "FAILED")
                << "]\n        " << fact.certificate << "\n";
  }
  return c.expected_pattern() && oracle ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"locale-lab: exact computations with finite frames, "
               "sublocales and their spectra"};
  app.require_subcommand(1);

  CommonFlags flags;

  std::string path;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "parse an input file, build its frame, run every check");
  analyze->add_option("input", path, "space or poset file")->required();
  add_cap_flags(analyze, flags);

  std::string suite = "all";
  CLI::App* check = app.add_subcommand(
      "check", "run selected theorem suites on an input file");
  check->add_option("input", path, "space or poset file")->required();
  check->add_option("--suite", suite, "td|total|scattered|coframe|all")
      ->check(CLI::IsMember({"td", "total", "scattered", "coframe", "all"}));
  add_cap_flags(check, flags);

  int trials = 100, max_points = 5, cof_range = 6;
  uint64_t seed = 0;
  bool has_replay = false;
  uint64_t replay_seed = 0;
  CLI::App* random = app.add_subcommand(
      "random", "run the suites over deterministic random spaces");
  random->add_option("--trials", trials, "number of random spaces");
  random->add_option("--max-points", max_points, "points per space, at most");
  random->add_option("--seed", seed, "base seed");
  random->add_option("--replay", replay_seed,
                     "re-run one trial seed verbatim");
  add_cap_flags(random, flags);

  CLI::App* cofinite = app.add_subcommand(
      "cofinite", "print the cofinite-frame classification and certificates");
  cofinite->add_option("--range", cof_range,
                       "adjunction oracle complement range");
  add_cap_flags(cofinite, flags);

  try {
    app.parse(argc, argv);
    has_replay = random->count("--replay") > 0;
    if (analyze->parsed()) return run_analyze_command(path, flags);
    if (check->parsed()) {
      flags.options.suite_td = suite == "td" || suite == "all";
      flags.options.suite_totally_spatial =
          suite == "total" || suite == "all";
      flags.options.suite_scattered = suite == "scattered" || suite == "all";
      flags.options.suite_coframe = suite == "coframe" || suite == "all";
      return run_analyze_command(path, flags);
    }
    if (random->parsed()) {
      if (has_replay) return run_replay_command(replay_seed, max_points, flags);
      return run_random_command(trials, max_points, seed, flags);
    }
    if (cofinite->parsed()) return run_cofinite_command(cof_range, flags);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const lab::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const lab::CapExceeded& e) {
    std::cerr << "skipped: " << e.what() << "\n";
    return 3;
  } catch (const lab::Error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
