#include <doctest.h>

#include "s4cover/maps.hpp"
#include "s4cover/report.hpp"
#include "s4cover/suites.hpp"

using namespace s4cover;

TEST_CASE("suite registry") {
  const auto& names = suite_names();
  CHECK(names.size() == 8);
  CHECK(names.front() == "group");
  CHECK(names.back() == "kuiper");
  CHECK_THROWS_AS(run_suite("bogus", 10, 7, Tolerance{}), UnknownSuite);
}

TEST_CASE("group and identities suites pass at the default tolerance") {
  const Report g = run_suite("group", 1000, 7, Tolerance{});
  CHECK(g.pass);
  CHECK(g.max_error <= 1e-9);
  CHECK(g.failures.empty());

  const Report id = run_suite("identities", 1000, 7, Tolerance{});
  CHECK(id.pass);
  CHECK(id.max_error <= 1e-9);
}

TEST_CASE("a tolerance below the rounding floor fails with a reported error") {
  Tolerance tight;
  tight.suite_tol = 1e-30;
  const Report g = run_suite("group", 200, 7, tight);
  CHECK_FALSE(g.pass);
  CHECK(g.max_error > 1e-30);
  CHECK(!g.failures.empty());
  CHECK(g.failures.size() <= Report::kMaxFailures);
}

TEST_CASE("remaining suites pass at desk scale") {
  CHECK(run_suite("free-action", 300, 7, Tolerance{}).pass);
  CHECK(run_suite("diagram", 100, 7, Tolerance{}).pass);
  CHECK(run_suite("covering", 100, 7, Tolerance{}).pass);
  CHECK(run_suite("branch", 100, 7, Tolerance{}).pass);
  CHECK(run_suite("partition", 1000, 7, Tolerance{}).pass);
}

TEST_CASE("kuiper suite passes with a sampling-matched hull tolerance") {
  Tolerance tol;
  tol.suite_tol = 1e-12;
  tol.hull_tol = 0.2;  // 2000 samples leave a coarser support gap
  const Report k = run_suite("kuiper", 2000, 7, tol);
  CHECK(k.pass);
  CHECK(k.tolerance == 0.2);
}

TEST_CASE("reports serialize to one JSON line and back") {
  const Report g = run_suite("group", 100, 9, Tolerance{});
  const std::string line = g.to_json_line();
  CHECK(line.find('\n') == std::string::npos);
  const Report back = Report::from_json_line(line);
  CHECK(back.suite == g.suite);
  CHECK(back.samples == g.samples);
  CHECK(back.seed == g.seed);
  CHECK(back.max_error == g.max_error);
  CHECK(back.tolerance == g.tolerance);
  CHECK(back.pass == g.pass);
  CHECK(back.pass == (back.max_error <= back.tolerance && back.failures.empty()));
}

TEST_CASE("suite runs are reproducible") {
  const Report a = run_suite("identities", 500, 123, Tolerance{});
  const Report b = run_suite("identities", 500, 123, Tolerance{});
  CHECK(a.to_json_line() == b.to_json_line());
}

TEST_CASE("the identities suite detects a corrupted eth formula") {
  const EthFn bad = [](const CplxProj<2>& p) {
    return eth_with_signs(p, EthSigns::flipped(3));
  };
  const Report r = run_identities_suite(200, 7, Tolerance{}, bad);
  CHECK_FALSE(r.pass);
  CHECK(r.max_error > 1e-6);
}
