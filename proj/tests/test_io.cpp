#include <doctest.h>

#include "locale_lab/errors.hpp"
#include "locale_lab/report.hpp"
#include "test_helpers.hpp"

using namespace lab;

TEST_CASE("parsing spaces") {
  ParsedInput in = parse_input_text(
      "# comment\n"
      "space sierpinski\n"
      "points: x y\n"
      "open:\n"
      "open: y\n"
      "open: x y\n");
  CHECK(in.name == "sierpinski");
  REQUIRE(in.is_space());
  CHECK(in.space().point_count() == 2);
  CHECK(in.space().opens.size() == 3);
}

TEST_CASE("parsing posets takes the reflexive-transitive closure") {
  ParsedInput in = parse_input_text(
      "poset chain3\n"
      "points: a b c\n"
      "le: a b\n"
      "le: b c\n");
  REQUIRE_FALSE(in.is_space());
  CHECK(in.poset().leq_rows[0].test(2));  // a <= c by closure
  CHECK(frame_from_poset_upsets(in.poset()).lattice.size() == 4);
}

TEST_CASE("parse errors carry line numbers") {
  SUBCASE("undeclared point") {
    try {
      parse_input_text("space s\npoints: x\nopen: x y\n");
      FAIL("must throw");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
    }
  }
  SUBCASE("missing header") {
    CHECK_THROWS_AS(parse_input_text("points: x\n"), ParseError);
  }
  SUBCASE("empty input") {
    CHECK_THROWS_AS(parse_input_text(""), ParseError);
  }
  SUBCASE("duplicate points") {
    CHECK_THROWS_AS(parse_input_text("space s\npoints: x x\n"), ParseError);
  }
  SUBCASE("directive mismatch") {
    CHECK_THROWS_AS(parse_input_text("poset p\npoints: x\nopen: x\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_input_text("space s\npoints: x\nle: x x\n"),
                    ParseError);
  }
  SUBCASE("order cycles") {
    CHECK_THROWS_AS(
        parse_input_text("poset p\npoints: x y\nle: x y\nle: y x\n"),
        NotAPartialOrder);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(parse_input("/nonexistent/path.space"), IoError);
  }
}

TEST_CASE("the empty points line gives the empty space") {
  ParsedInput in = parse_input_text("space empty\npoints:\nopen:\n");
  CHECK(in.space().point_count() == 0);
  AnalysisReport r = run_analyze(in);
  CHECK(r.exit_code() == 0);
  CHECK(r.elements == 1);
  CHECK(r.prime_count == 0);
}

TEST_CASE("analyzing the sierpinski space end to end") {
  ParsedInput in = parse_input_text(
      "space sierpinski\npoints: x y\nopen:\nopen: y\nopen: x y\n");
  AnalysisReport r = run_analyze(in);
  CHECK(r.exit_code() == 0);
  CHECK(r.elements == 3);
  CHECK(r.prime_count == 2);
  CHECK(r.sublocale_count == 4);
  CHECK(r.space->sober);
  CHECK(r.space->td);
  CHECK(r.suites.size() == 4);
  for (const TheoremReport& t : r.suites) CHECK(t.all_true());
  for (const DiagramReport& d : r.diagrams) CHECK(d.all_ok());
}

TEST_CASE("analyzing the two-point indiscrete space") {
  ParsedInput in =
      parse_input_text("space indis\npoints: x y\nopen:\nopen: x y\n");
  AnalysisReport r = run_analyze(in);
  CHECK(r.elements == 2);       // the frame is the two-chain
  CHECK(r.prime_count == 1);    // the spectrum has one point
  CHECK_FALSE(r.space->sober);  // noted as data, not a failure
  CHECK(r.exit_code() == 0);
}

TEST_CASE("invalid inputs propagate as input errors, not law failures") {
  FiniteSpace bad{{"x", "y"}, {0}};  // missing the total set
  ParsedInput in{"bad", bad};
  CHECK_THROWS_AS(run_analyze(in), NotATopology);
}

TEST_CASE("caps mark phases skipped, not failed") {
  ParsedInput in = parse_input_text(
      "space d3\npoints: x y z\n"
      "open:\nopen: x\nopen: y\nopen: z\nopen: x y\nopen: x z\n"
      "open: y z\nopen: x y z\n");
  AnalyzeOptions opt;
  opt.caps.max_enumeration = 2;
  opt.caps.max_exhaustive_primes = 1;
  AnalysisReport r = run_analyze(in, opt);
  CHECK(r.exit_code() == 3);
  CHECK(r.any_skip());
  CHECK_FALSE(r.any_failure());
}

TEST_CASE("reports are deterministic modulo timings") {
  ParsedInput in = parse_input_text(
      "space sierpinski\npoints: x y\nopen:\nopen: y\nopen: x y\n");
  AnalysisReport a = run_analyze(in);
  AnalysisReport b = run_analyze(in);
  CHECK(a.to_json(false).dump() == b.to_json(false).dump());
  AnalyzeOptions threaded;
  threaded.caps.threads = 4;
  AnalysisReport c = run_analyze(in, threaded);
  CHECK(a.to_json(false).dump() == c.to_json(false).dump());
}

TEST_CASE("suite selection") {
  ParsedInput in = parse_input_text(
      "space sierpinski\npoints: x y\nopen:\nopen: y\nopen: x y\n");
  AnalyzeOptions only_coframe;
  only_coframe.suite_td = false;
  only_coframe.suite_totally_spatial = false;
  only_coframe.suite_scattered = false;
  AnalysisReport r = run_analyze(in, only_coframe);
  REQUIRE(r.suites.size() == 1);
  CHECK(r.suites[0].tag == TheoremTag::kCoframe);
}

TEST_CASE("poset analysis matches the analysis of its Alexandroff space") {
  ParsedInput poset = parse_input_text(
      "poset c\npoints: p q r\nle: p q\nle: q r\n");
  FiniteSpace alex = alexandroff_space(poset.poset());
  ParsedInput space{"c", alex};
  nlohmann::ordered_json a = run_analyze(poset).to_json(false);
  nlohmann::ordered_json b = run_analyze(space).to_json(false);
  a["input"].erase("kind");
  b["input"].erase("kind");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("the random suite") {
  SUBCASE("all trials pass at desk scale") {
    RandomSuiteSummary s = run_random_suite(20, 4, 42);
    CHECK(s.trials == 20);
    CHECK(s.passed == 20);
    CHECK_FALSE(s.first_failure.has_value());
  }
  SUBCASE("zero trials give an empty summary") {
    RandomSuiteSummary s = run_random_suite(0, 4, 42);
    CHECK(s.trials == 0);
    CHECK(s.all_passed());
  }
  SUBCASE("summaries are identical across worker counts") {
    AnalyzeOptions one, four;
    one.caps.threads = 1;
    four.caps.threads = 4;
    CHECK(run_random_suite(12, 4, 9, one).to_json().dump() ==
          run_random_suite(12, 4, 9, four).to_json().dump());
  }
  SUBCASE("replay parameters are deterministic") {
    RandomTrial t1 = random_trial_parameters(1234, 5);
    RandomTrial t2 = random_trial_parameters(1234, 5);
    CHECK(t1.points == t2.points);
    CHECK(t1.density == t2.density);
    FiniteSpace a = random_space(t1.points, t1.seed, t1.density);
    FiniteSpace b = random_space(t2.points, t2.seed, t2.density);
    CHECK(a.opens == b.opens);
    ParsedInput ia{"r", a}, ib{"r", b};
    CHECK(run_analyze(ia).to_json(false).dump() ==
          run_analyze(ib).to_json(false).dump());
  }
}
