#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "altnf/error.hpp"
#include "altnf/presentation.hpp"
#include "altnf/word.hpp"

using namespace altnf;

namespace {

std::vector<Permutation> standard_images(int n) {
  std::vector<Permutation> images;
  for (int i = 1; i <= n - 2; ++i)
    images.push_back(Permutation::three_cycle(i, n));
  return images;
}

int count_kind(const std::vector<RelationInstance> &instances,
               RelationKind kind) {
  int c = 0;
  for (const RelationInstance &inst : instances)
    c += inst.kind == kind ? 1 : 0;
  return c;
}

} // namespace

TEST_CASE("relation instance counts per degree") {
  auto at4 = relation_instances(4);
  CHECK(at4.size() == 3); // R1 R2 S1
  CHECK(count_kind(at4, RelationKind::R) == 2);
  CHECK(count_kind(at4, RelationKind::S) == 1);
  CHECK(count_kind(at4, RelationKind::Q) == 0);
  CHECK(count_kind(at4, RelationKind::T) == 0);

  auto at5 = relation_instances(5);
  CHECK(at5.size() == 6);
  CHECK(count_kind(at5, RelationKind::T) == 1);

  auto at7 = relation_instances(7);
  CHECK(at7.size() == 15);
  CHECK(count_kind(at7, RelationKind::R) == 5);
  CHECK(count_kind(at7, RelationKind::S) == 4);
  CHECK(count_kind(at7, RelationKind::Q) == 3); // (1,4) (1,5) (2,5)
  CHECK(count_kind(at7, RelationKind::T) == 3);
}

TEST_CASE("instance words and names") {
  RelationInstance t1 = make_instance(RelationKind::T, 1, 0, 5);
  CHECK(format_word(t1.lhs) == "x1 x2^2 x3");
  CHECK(format_word(t1.rhs) == "x3 x1");
  CHECK(t1.name() == "T i=1");

  RelationInstance q = make_instance(RelationKind::Q, 1, 4, 8);
  CHECK(q.name() == "Q i=1 j=4");
  CHECK(format_word(q.lhs) == "x1 x4");

  RelationInstance tp = make_instance(RelationKind::Tprime, 2, 0, 7);
  CHECK(tp.name() == "T' i=2");
  CHECK(format_word(tp.rhs) == "x4 x2^2 x4^2 x2");
}

TEST_CASE("make_instance validates ranges") {
  CHECK_THROWS_AS(make_instance(RelationKind::R, 0, 0, 5), error);
  CHECK_THROWS_AS(make_instance(RelationKind::R, 4, 0, 5), error);
  CHECK_THROWS_AS(make_instance(RelationKind::S, 3, 0, 5), error);
  CHECK_THROWS_AS(make_instance(RelationKind::Q, 1, 3, 8), error); // j-i < 3
  CHECK_THROWS_AS(make_instance(RelationKind::Q, 2, 1, 8), error);
  CHECK_THROWS_AS(make_instance(RelationKind::T, 2, 0, 5), error);
}

TEST_CASE("every relation holds under the standard assignment") {
  for (int n = 3; n <= 12; ++n) {
    for (const RelationInstance &inst : relation_instances(n))
      CHECK(evaluate(inst.lhs, n) == evaluate(inst.rhs, n));
  }
}

TEST_CASE("the rearranged T' family holds as well") {
  for (int n = 5; n <= 9; ++n)
    for (int i = 1; i <= n - 4; ++i) {
      RelationInstance tp = make_instance(RelationKind::Tprime, i, 0, n);
      CHECK(evaluate(tp.lhs, n) == evaluate(tp.rhs, n));
    }
}

TEST_CASE("check_assignment passes with the standard 3-cycles") {
  for (int n = 3; n <= 10; ++n) {
    VerificationReport rep = check_assignment(standard_images(n), n);
    CHECK(rep.passed);
    CHECK(rep.check == "relations");
    CHECK(rep.n == n);
    CHECK(rep.counterexample.empty());
  }
  CHECK(check_assignment(standard_images(7), 7).stats.at("instances") == 15);
}

TEST_CASE("check_assignment pinpoints the first broken instance") {
  // x_2 mapped to the same 3-cycle as x_1: the cubes still hold, the first
  // braid instance does not.
  std::vector<Permutation> bad{Permutation::three_cycle(1, 5),
                               Permutation::three_cycle(1, 5),
                               Permutation::three_cycle(3, 5)};
  VerificationReport rep = check_assignment(bad, 5);
  CHECK_FALSE(rep.passed);
  CHECK(rep.counterexample.at("instance") == "S i=1");
}

TEST_CASE("check_assignment validates shape") {
  CHECK_THROWS_AS(check_assignment(standard_images(5), 6), error);
  CHECK_THROWS_AS(check_assignment(standard_images(6), 5), error);
  std::vector<Permutation> wrong_degree{Permutation::three_cycle(1, 6),
                                        Permutation::three_cycle(2, 6),
                                        Permutation::three_cycle(3, 6)};
  CHECK_THROWS_AS(check_assignment(wrong_degree, 5), error);
}

TEST_CASE("builtin scripts") {
  const auto &scripts = builtin_scripts();
  CHECK(scripts.size() == 4);
  CHECK_NOTHROW(find_script("theorem2"));
  CHECK_NOTHROW(find_script("xtop_square"));
  CHECK_NOTHROW(find_script("collision"));
  CHECK_NOTHROW(find_script("n4_special"));
  CHECK_THROWS_AS(find_script("nope"), error);
}

TEST_CASE("script parameter ranges") {
  const DerivationScript &t2 = find_script("theorem2");
  CHECK(t2.max_param(9) == 5);
  CHECK(t2.max_param(5) == 1);
  CHECK(t2.max_param(4) == 0);
  CHECK(find_script("xtop_square").max_param(4) == 1);
  CHECK(find_script("n4_special").max_param(9) == 1); // fixed parameter
  CHECK_THROWS_AS(verify_derivation(t2, 0, 9), error);
  CHECK_THROWS_AS(verify_derivation(t2, 6, 9), error);
  CHECK_THROWS_AS(verify_derivation(t2, 1, 4), error);
}

TEST_CASE("all chains verify at every admissible parameter") {
  for (const DerivationScript &script : builtin_scripts())
    for (int n = script.min_n; n <= 9; ++n)
      for (int i = 1; i <= script.max_param(n); ++i) {
        VerificationReport rep = verify_derivation(script, i, n);
        CAPTURE(script.name);
        CAPTURE(n);
        CAPTURE(i);
        CHECK(rep.passed);
        // Every shipped step is also syntactically licensed.
        CHECK(rep.stats.at("level2_matched") == rep.stats.at("steps"));
        CHECK(rep.stats.at("citations_checked") == rep.stats.at("steps"));
      }
}

TEST_CASE("the induction chain closes to the identity") {
  VerificationReport rep = verify_derivation(find_script("theorem2"), 2, 9);
  CHECK(rep.passed);
  CHECK(rep.stats.at("steps") == 7);
  CHECK(rep.stats.at("reduces_to_identity") == 1);
}

TEST_CASE("boundary parameters lift to a faithful degree") {
  // At i = n-4 the chain touches x_{n-1}, one index past the degree-n
  // generator list; the evaluation degree grows to compensate.
  VerificationReport boundary =
      verify_derivation(find_script("theorem2"), 1, 5);
  CHECK(boundary.passed);
  CHECK(boundary.stats.at("faithful_degree") == 6);

  VerificationReport inner = verify_derivation(find_script("theorem2"), 1, 9);
  CHECK(inner.stats.at("faithful_degree") == 9);
  VerificationReport top = verify_derivation(find_script("theorem2"), 5, 9);
  CHECK(top.stats.at("faithful_degree") == 10);
}

TEST_CASE("stationarity holds for the shifted windows") {
  for (int n = 5; n <= 8; ++n) {
    VerificationReport rep = check_stationarity(n);
    CAPTURE(n);
    CHECK(rep.passed);
    std::int64_t expected = 1;
    for (int k = 3; k <= n - 1; ++k)
      expected *= k;
    CHECK(rep.stats.at("expected_order") == expected);
    CHECK(rep.stats.at("g1_order") == expected);
    CHECK(rep.stats.at("g2_order") == expected);
  }
  CHECK_THROWS_AS(check_stationarity(4), error);
}
