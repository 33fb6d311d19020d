#include "locale_lab/report.hpp"

#include <chrono>
#include <sstream>

#include "locale_lab/errors.hpp"
#include "locale_lab/parallel.hpp"
#include "locale_lab/spectrum.hpp"
#include "locale_lab/sublocale.hpp"

namespace lab {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

const char* tag_name(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::kTd:
      return "td";
    case TheoremTag::kTotallySpatial:
      return "totally_spatial";
    case TheoremTag::kScattered:
      return "scattered";
    case TheoremTag::kCoframe:
      return "coframe";
  }
  return "?";
}

nlohmann::ordered_json diagram_json(const DiagramReport& d) {
  nlohmann::ordered_json laws = nlohmann::ordered_json::array();
  for (const LawCheck& l : d.laws) {
    nlohmann::ordered_json j{{"law", l.law}, {"ok", l.ok}};
    if (!l.ok) {
      j["witness"] = l.first_witness();
      if (l.witnesses.size() > 1) j["witnesses"] = l.witnesses;
    }
    laws.push_back(std::move(j));
  }
  return {{"name", d.name}, {"all_ok", d.all_ok()}, {"laws", std::move(laws)}};
}

nlohmann::ordered_json suite_json(const TheoremReport& t) {
  nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
  for (const Verdict& v : t.verdicts) {
    nlohmann::ordered_json j{{"label", v.label}};
    if (v.computed) {
      j["holds"] = v.holds;
      if (!v.holds) j["witness"] = v.witness;
    } else {
      j["skipped"] = v.witness;
    }
    verdicts.push_back(std::move(j));
  }
  return {{"theorem", tag_name(t.tag)},
          {"agreement", t.agreement},
          {"all_true", t.all_true()},
          {"closed_form_only", t.closed_form_only},
          {"verdicts", std::move(verdicts)}};
}

}  // namespace

bool AnalysisReport::any_failure() const {
  for (const PhaseInfo& p : phases)
    if (p.status == "failed") return true;
  for (const DiagramReport& d : diagrams)
    if (!d.all_ok()) return true;
  for (const TheoremReport& t : suites)
    if (!t.all_true()) return true;
  return false;
}

bool AnalysisReport::any_skip() const {
  for (const PhaseInfo& p : phases)
    if (p.status == "skipped") return true;
  for (const TheoremReport& t : suites)
    if (t.closed_form_only) return true;
  return false;
}

int AnalysisReport::exit_code() const {
  if (any_failure()) return 1;
  if (any_skip()) return 3;
  return 0;
}

nlohmann::ordered_json AnalysisReport::to_json(bool with_timings) const {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["input"] = {{"name", input_name},
                {"kind", input_kind},
                {"points", point_count},
                {"opens", open_count}};
  if (space) {
    nlohmann::ordered_json s{{"t0", space->t0},
                             {"sober", space->sober},
                             {"td", space->td}};
    if (space->scattered) s["scattered"] = *space->scattered;
    if (space->skula_discrete) s["skula_discrete"] = *space->skula_discrete;
    j["space"] = std::move(s);
  }
  j["lattice"] = {{"elements", elements},
                  {"primes", prime_count},
                  {"spatial", spatial}};
  if (sublocale_count) {
    j["sublocales"] = {{"count", *sublocale_count},
                       {"backend", enumeration_backend}};
  }
  nlohmann::ordered_json diags = nlohmann::ordered_json::array();
  for (const DiagramReport& d : diagrams) diags.push_back(diagram_json(d));
  j["diagrams"] = std::move(diags);
  nlohmann::ordered_json sts = nlohmann::ordered_json::array();
  for (const TheoremReport& t : suites) sts.push_back(suite_json(t));
  j["suites"] = std::move(sts);
  if (!dossiers.empty()) {
    nlohmann::ordered_json ds = nlohmann::ordered_json::array();
    for (const PrimeDossier& d : dossiers)
      ds.push_back({{"prime", d.prime},
                    {"weakly_covered", d.weakly_covered},
                    {"covered", d.covered},
                    {"completely_prime", d.completely_prime},
                    {"isolated_in_skula", d.isolated_in_skula},
                    {"isolated_in_upset_spectrum",
                     d.isolated_in_upset_spectrum}});
    j["prime_dossiers"] = std::move(ds);
  }
  nlohmann::ordered_json ph = nlohmann::ordered_json::array();
  for (const PhaseInfo& p : phases) {
    nlohmann::ordered_json e{{"phase", p.name}, {"status", p.status}};
    if (!p.detail.empty()) e["detail"] = p.detail;
    if (with_timings) e["ms"] = p.ms;
    ph.push_back(std::move(e));
  }
  j["phases"] = std::move(ph);
  j["exit_code"] = exit_code();
  return j;
}

std::string AnalysisReport::to_text() const {
  std::ostringstream out;
  out << input_kind << " '" << input_name << "': " << point_count
      << " points, " << open_count << " opens\n";
  if (space) {
    out << "  space: t0=" << space->t0 << " sober=" << space->sober
        << " td=" << space->td;
    if (space->scattered) out << " scattered=" << *space->scattered;
    if (space->skula_discrete)
      out << " skula_discrete=" << *space->skula_discrete;
    out << "\n";
  }
  out << "  frame: " << elements << " elements, " << prime_count
      << " primes, spatial=" << spatial << "\n";
  if (sublocale_count)
    out << "  sublocales: " << *sublocale_count << " ("
        << enumeration_backend << ")\n";
  for (const DiagramReport& d : diagrams) {
    out << "  " << d.name << ": " << (d.all_ok() ? "ok" : "FAILED") << "\n";
    for (const LawCheck& l : d.laws)
      if (!l.ok)
        out << "    failed: " << l.law << " at " << l.first_witness() << "\n";
  }
  for (const TheoremReport& t : suites) {
    out << "  suite " << tag_name(t.tag) << ": "
        << (t.all_true() ? "agreement" : "DISAGREEMENT");
    if (t.closed_form_only) out << " (some verdicts skipped)";
    out << "\n";
    for (const Verdict& v : t.verdicts)
      if (v.computed && !v.holds)
        out << "    false: " << v.label << " at " << v.witness << "\n";
  }
  for (const PhaseInfo& p : phases)
    if (p.status != "ok")
      out << "  phase " << p.name << ": " << p.status
          << (p.detail.empty() ? "" : " (" + p.detail + ")") << "\n";
  out << "  exit: " << exit_code() << "\n";
  return out.str();
}

AnalysisReport run_analyze(const ParsedInput& input,
                           const AnalyzeOptions& options) {
  AnalysisReport r;
  r.input_name = input.name;
  r.input_kind = input.is_space() ? "space" : "poset";
  const Caps& caps = options.caps;

  auto phase = [&](const std::string& name, auto&& body) {
    Clock::time_point start = Clock::now();
    PhaseInfo info{name, "ok", "", 0.0};
    try {
      body();
    } catch (const CapExceeded& e) {
      info.status = "skipped";
      info.detail = e.what();
    } catch (const Error& e) {
      info.status = "failed";
      info.detail = e.what();
    }
    info.ms = ms_since(start);
    r.phases.push_back(std::move(info));
    return r.phases.back().status == std::string("ok");
  };

  // The frame phase propagates InputError to the caller (exit code 2);
  // anything diagnosed later runs against a validated frame, so failures
  // there are law violations, not input problems.
  std::optional<FrameOfOpens> frame;
  std::optional<FiniteSpace> the_space;
  {
    Clock::time_point start = Clock::now();
    try {
      if (input.is_space()) {
        the_space = input.space();
        frame = frame_from_space(*the_space, caps);
      } else {
        the_space = alexandroff_space(input.poset());
        frame = frame_from_poset_upsets(input.poset(), caps);
      }
    } catch (const CapExceeded& e) {
      r.phases.push_back({"frame", "skipped", e.what(), ms_since(start)});
      return r;
    }
    r.point_count = the_space->point_count();
    r.open_count = static_cast<int>(the_space->opens.size());
    r.elements = frame->lattice.size();
    r.phases.push_back({"frame", "ok", "", ms_since(start)});
  }

  const FiniteLattice& L = frame->lattice;

  phase("space_diagnostics", [&] {
    SpaceDiagnostics d;
    d.t0 = is_t0(*the_space);
    d.sober = is_sober(*the_space);
    d.td = is_td_space(*the_space);
    try {
      d.scattered = is_scattered_space(*the_space, caps);
    } catch (const CapExceeded&) {
    }
    try {
      d.skula_discrete = is_discrete(skula_space(*the_space));
    } catch (const CapExceeded&) {
    }
    r.space = d;
  });

  phase("spectrum", [&] {
    r.prime_count = primes(L).count();
    r.spatial = is_spatial(L);
    if (!r.spatial)
      throw CrossCheckError("a finite frame of opens must be spatial");
  });

  phase("sublocales", [&] {
    std::vector<Sublocale> subs = enumerate_sublocales(L, caps);
    r.sublocale_count = static_cast<int>(subs.size());
    r.enumeration_backend =
        L.size() <= caps.max_enumeration ? "subset_filter" : "join_closure";
  });

  phase("diagrams", [&] {
    r.diagrams.push_back(check_adjunction(L, caps, options.witness_policy));
    r.diagrams.push_back(check_conucleus(L, caps, options.witness_policy));
    r.diagrams.push_back(check_main_diagram(L, caps, options.witness_policy));
    r.diagrams.push_back(assembly_spectrum_vs_skula(L, caps));
  });

  if (options.suite_td)
    phase("suite_td", [&] { r.suites.push_back(theorem_td(L, caps)); });
  if (options.suite_totally_spatial)
    phase("suite_totally_spatial",
          [&] { r.suites.push_back(theorem_totally_spatial(L, caps)); });
  if (options.suite_scattered)
    phase("suite_scattered",
          [&] { r.suites.push_back(theorem_scattered(L, caps)); });
  if (options.suite_coframe)
    phase("suite_coframe",
          [&] { r.suites.push_back(coframe_proposition(L, caps)); });

  phase("prime_dossiers", [&] {
    if (r.prime_count > caps.max_exhaustive_primes)
      throw CapExceeded("dossiers are computed up to the prime cap");
    r.dossiers = prime_dossiers(L, caps);
  });

  return r;
}

namespace {

struct SplitMix64 {
  uint64_t state;
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

constexpr double kDensities[] = {0.2, 0.35, 0.5, 0.65, 0.8};

}  // namespace

RandomTrial random_trial_parameters(uint64_t trial_seed, int max_points) {
  SplitMix64 rng{trial_seed ^ 0xa02cbe3544f1f6c1ull};
  RandomTrial t;
  t.seed = trial_seed;
  t.points = 1 + static_cast<int>(rng.next() % std::max(1, max_points));
  t.density = kDensities[rng.next() % 5];
  return t;
}

nlohmann::ordered_json RandomSuiteSummary::to_json() const {
  nlohmann::ordered_json j{{"schema_version", AnalysisReport::kSchemaVersion},
                           {"trials", trials},
                           {"passed", passed}};
  if (first_failure)
    j["first_failure"] = {{"seed", first_failure->seed},
                          {"points", first_failure->points},
                          {"density", first_failure->density}};
  return j;
}

RandomSuiteSummary run_random_suite(int trials, int max_points, uint64_t seed,
                                    const AnalyzeOptions& options) {
  RandomSuiteSummary summary;
  summary.trials = trials;
  if (trials <= 0) return summary;
  summary.all.assign(trials, RandomTrial{});
  const int threads = configured_threads(options.caps.threads);
  run_chunked(static_cast<uint64_t>(trials), threads,
              [&](int, uint64_t begin, uint64_t end) {
                for (uint64_t t = begin; t < end; ++t) {
                  RandomTrial trial =
                      random_trial_parameters(seed + t, max_points);
                  bool ok = false;
                  try {
                    FiniteSpace X = random_space(trial.points, trial.seed,
                                                 trial.density, options.caps);
                    ParsedInput in{"random", X};
                    AnalysisReport rep = run_analyze(in, options);
                    ok = !rep.any_failure();
                  } catch (const Error&) {
                    ok = false;
                  }
                  trial.passed = ok;
                  summary.all[t] = trial;
                }
              });
  for (const RandomTrial& t : summary.all) {
    if (t.passed)
      ++summary.passed;
    else if (!summary.first_failure)
      summary.first_failure = t;
  }
  return summary;
}

}  // namespace lab
