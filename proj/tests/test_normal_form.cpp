#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <unordered_set>

#include "altnf/error.hpp"
#include "altnf/normal_form.hpp"

using namespace altnf;

namespace {

Word random_word(std::mt19937 &rng, int n, int max_len) {
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_int_distribution<int> index_dist(1, n - 2);
  std::uniform_int_distribution<int> exp_dist(1, 2);
  Word w;
  int len = len_dist(rng);
  for (int k = 0; k < len; ++k)
    w.letters.push_back({index_dist(rng), exp_dist(rng)});
  return w;
}

} // namespace

TEST_CASE("y-factor words") {
  CHECK(format_word(y_word(3, 1)) == "x3 x2 x1");
  CHECK(format_word(y_word(3, 0)) == "x3 x2 x1^2");
  CHECK(format_word(y_word(3, 3)) == "x3");
  CHECK(format_word(y_word(3, 4)) == "e");
  CHECK(format_word(y_word(1, 0)) == "x1^2");
  CHECK(format_word(y_word(1, 1)) == "x1");
  CHECK_THROWS_AS(y_word(0, 0), error);
  CHECK_THROWS_AS(y_word(3, 5), error);
  CHECK_THROWS_AS(y_word(3, -1), error);
}

TEST_CASE("tuple validation") {
  CHECK_NOTHROW(nf_tuple(4, {2, 3}));
  CHECK_THROWS_AS(nf_tuple(4, {2}), error);       // wrong length
  CHECK_THROWS_AS(nf_tuple(4, {3, 0}), error);    // k_1 > 2
  CHECK_THROWS_AS(nf_tuple(4, {0, -1}), error);
  CHECK_THROWS_AS(nf_tuple(2, {}), error);
  CHECK(identity_tuple(5).k == std::vector<int>{2, 3, 4});
  CHECK(nf_evaluate(identity_tuple(5)).is_identity());
}

TEST_CASE("canonical words concatenate the factors") {
  CHECK(format_word(nf_to_word(nf_tuple(4, {1, 1}))) == "x1 x2 x1");
  CHECK(format_word(nf_to_word(nf_tuple(4, {2, 3}))) == "e");
  CHECK(format_word(nf_to_word(nf_tuple(5, {0, 1, 3}))) == "x1^2 x2 x1 x3");
}

TEST_CASE("normalization of the square of a generator") {
  NormalFormTuple t = normalize_word(parse_word("x2^2"), 4);
  CHECK(t.k == std::vector<int>{1, 1});
  CHECK(format_word(nf_to_word(t)) == "x1 x2 x1");
  CHECK(format_perm_cycles(nf_evaluate(t)) == "(2 4 3)");
}

TEST_CASE("normalization reorders distant letters") {
  NormalFormTuple t = normalize_word(parse_word("x3 x1"), 5);
  CHECK(t.k == std::vector<int>{0, 1, 3});
  CHECK(nf_evaluate(t) == evaluate(parse_word("x3 x1"), 5));
}

TEST_CASE("normalization fixes canonical words") {
  for (int n = 4; n <= 6; ++n)
    enumerate(n, [&](std::uint64_t, const NormalFormTuple &t,
                     const Permutation &) {
      CHECK(normalize_word(nf_to_word(t), n).k == t.k);
    });
}

TEST_CASE("normalization validates its input") {
  CHECK_THROWS_AS(normalize_word(parse_word("x3"), 4), error);
  CHECK_THROWS_AS(normalize_word(parse_word("x1"), 2), error);
  CHECK_THROWS_AS(normalize_word(parse_word("v1"), 4), error);
  CHECK(normalize_word(Word{}, 5).k == identity_tuple(5).k);
}

TEST_CASE("normalization agrees with evaluation on random words") {
  std::mt19937 rng(271828);
  for (int n = 4; n <= 8; ++n)
    for (int trial = 0; trial < 300; ++trial) {
      Word w = random_word(rng, n, 40);
      NormalFormTuple t = normalize_word(w, n);
      CAPTURE(n);
      CAPTURE(format_word(w));
      CHECK(nf_evaluate(t) == evaluate(w, n));
      // Idempotence: the canonical word is already in normal form.
      CHECK(normalize_word(nf_to_word(t), n).k == t.k);
    }
}

TEST_CASE("encoding peels the top factor") {
  CHECK(encode_perm(Permutation({2, 1, 4, 3})).k == std::vector<int>{1, 2});
  CHECK(encode_perm(parse_perm("(1 2 3)", 5)).k == std::vector<int>{1, 3, 4});
  CHECK(encode_perm(Permutation::identity(6)).k ==
        identity_tuple(6).k);
}

TEST_CASE("encoding rejects bad input") {
  CHECK_THROWS_AS(encode_perm(Permutation({2, 1, 3})), error); // odd
  CHECK_THROWS_AS(encode_perm(Permutation({1, 2})), error);    // degree 2
}

TEST_CASE("encode inverts evaluation exhaustively") {
  for (int n = 3; n <= 7; ++n)
    enumerate(n, [&](std::uint64_t, const NormalFormTuple &t,
                     const Permutation &p) {
      CHECK(encode_perm(p).k == t.k);
    });
}

TEST_CASE("rank values") {
  CHECK(rank(nf_tuple(4, {1, 2})) == 7);  // 1 + 2*3
  CHECK(rank(nf_tuple(4, {2, 3})) == 11); // the identity, last rank
  CHECK(rank(nf_tuple(4, {0, 0})) == 0);
  CHECK(tuple_count(3) == 3);
  CHECK(tuple_count(4) == 12);
  CHECK(tuple_count(5) == 60);
  CHECK(tuple_count(6) == 360);
}

TEST_CASE("unrank inverts rank") {
  CHECK(unrank(5, 59).k == std::vector<int>{2, 3, 4});
  for (int n : {4, 5, 6})
    for (std::uint64_t r = 0; r < tuple_count(n); ++r)
      CHECK(rank(unrank(n, r)) == r);
  CHECK_THROWS_AS(unrank(4, 12), error);
  CHECK_THROWS_AS(unrank(21, 0), error); // past the 64-bit guard
}

TEST_CASE("enumeration runs in rank order and hits every element") {
  std::uint64_t expected_rank = 0;
  std::unordered_set<Permutation, PermutationHash> seen;
  enumerate(4, [&](std::uint64_t r, const NormalFormTuple &t,
                   const Permutation &p) {
    CHECK(r == expected_rank++);
    CHECK(rank(t) == r);
    CHECK(nf_evaluate(t) == p);
    CHECK(p.even());
    seen.insert(p);
  });
  CHECK(expected_rank == 12);
  CHECK(seen.size() == 12); // pairwise distinct, so all of A_4
}

TEST_CASE("range enumeration matches the full run") {
  std::vector<std::vector<int>> full;
  enumerate(5, [&](std::uint64_t, const NormalFormTuple &t,
                   const Permutation &) { full.push_back(t.k); });
  std::vector<std::vector<int>> part;
  enumerate_range(5, 20, 35, [&](std::uint64_t r, const NormalFormTuple &t,
                                 const Permutation &p) {
    CHECK(nf_evaluate(t) == p);
    CHECK(rank(t) == r);
    part.push_back(t.k);
  });
  CHECK(part.size() == 15);
  for (std::size_t k = 0; k < part.size(); ++k)
    CHECK(part[k] == full[20 + k]);
  CHECK_THROWS_AS(enumerate_range(5, 30, 20, [](std::uint64_t,
                                               const NormalFormTuple &,
                                               const Permutation &) {}),
                  error);
  CHECK_THROWS_AS(enumerate_range(5, 0, 61, [](std::uint64_t,
                                              const NormalFormTuple &,
                                              const Permutation &) {}),
                  error);
}

TEST_CASE("letter occurrence bounds in canonical words") {
  // x_{n-k} appears at most k-1 times; in particular the top letter at
  // most once.
  int n = 6;
  enumerate(n, [&](std::uint64_t, const NormalFormTuple &t,
                   const Permutation &) {
    std::vector<int> count(n, 0);
    for (const Letter &l : nf_to_word(t).letters)
      ++count[l.index];
    for (int j = 1; j <= n - 2; ++j)
      CHECK(count[j] <= n - j - 1);
  });
}

TEST_CASE("the top digit alone decides the preimage of the top point") {
  int n = 6;
  enumerate(n, [&](std::uint64_t, const NormalFormTuple &t,
                   const Permutation &p) {
    int k_top = t.k[n - 3];
    int expected = k_top == n - 1 ? n : (k_top == 0 ? 1 : k_top + 1);
    CHECK(p.preimage(n) == expected);
    CHECK((p(n) == n) == (k_top == n - 1));
  });
}

TEST_CASE("tuple text form") {
  CHECK(format_tuple(nf_tuple(5, {0, 1, 3})) == "0,1,3");
  CHECK(parse_tuple("0,1,3").k == std::vector<int>{0, 1, 3});
  CHECK(parse_tuple("0,1,3").n == 5);
  CHECK_THROWS_AS(parse_tuple(""), parse_error);
  CHECK_THROWS_AS(parse_tuple("1,,2"), parse_error);
  CHECK_THROWS_AS(parse_tuple("1,x"), parse_error);
  CHECK_THROWS_AS(parse_tuple("9,9"), error); // digits out of range
}
