#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "altnf/error.hpp"
#include "altnf/presentation.hpp"

using namespace altnf;

TEST_CASE("degree 5 census finds a single solution class") {
  VerificationReport rep = census_solutions(5);
  CHECK(rep.passed);
  CHECK(rep.stats.at("orbits") == 1);
  CHECK(rep.stats.at("orbits_alternating") == 2);
  CHECK(rep.stats.at("solutions") == 6);
  CHECK(rep.stats.at("order3_elements") == 20);
  REQUIRE(rep.representatives.size() == 1);
  CHECK(rep.representatives[0].size() == 3);
}

TEST_CASE("degree 6 census finds the exceptional second class") {
  VerificationReport rep = census_solutions(6);
  CHECK(rep.passed);
  CHECK(rep.stats.at("orbits") == 2);
  REQUIRE(rep.representatives.size() == 2);
  // One class is anchored at a plain 3-cycle, the other at a (3,3) element.
  CHECK(rep.representatives[0][0] == "(1 2 3)");
  CHECK(rep.representatives[1][0] == "(1 2 3)(4 5 6)");
}

TEST_CASE("degree 7 census is again rigid") {
  VerificationReport rep = census_solutions(7);
  CHECK(rep.passed);
  CHECK(rep.stats.at("orbits") == 1);
  CHECK(rep.stats.at("order3_elements") == 350);
}

TEST_CASE("the node budget is enforced") {
  try {
    census_solutions(5, 10);
    FAIL("expected the budget to run out");
  } catch (const error &e) {
    CHECK(std::string(e.what()).find("budget") != std::string::npos);
  }
}

TEST_CASE("degrees outside the supported window are rejected") {
  CHECK_THROWS_AS(census_solutions(4), error);
  CHECK_THROWS_AS(census_solutions(8), error);
}
