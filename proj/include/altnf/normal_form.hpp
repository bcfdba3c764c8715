#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "altnf/permutation.hpp"
#include "altnf/word.hpp"

namespace altnf {

/// Digits of the canonical factorization y_{1,k_1} y_{2,k_2} ... y_{n-2,k_{n-2}}
/// with 0 <= k_j <= j+1; k_j = j+1 is the empty factor.
struct NormalFormTuple {
  int n = 3;
  std::vector<int> k; // k[j-1] = k_j, length n-2

  bool operator==(const NormalFormTuple &) const = default;
};

/// Validates bounds and length; n >= 3.
NormalFormTuple nf_tuple(int n, std::vector<int> k);

/// All factors empty: the identity element.
NormalFormTuple identity_tuple(int n);

/// y_{m,k}: empty for k = m+1; x_m x_{m-1} ... x_k for 1 <= k <= m;
/// x_m ... x_2 x_1^2 for k = 0.
Word y_word(int m, int k);

/// The canonical word of the tuple (concatenated factors; already reduced).
Word nf_to_word(const NormalFormTuple &t);

Permutation nf_evaluate(const NormalFormTuple &t);

/// Rewrites an arbitrary x-word into its normal form tuple using only the
/// defining relations and the derived transformation rules, by recursion on
/// the top generator. Purely syntactic: permutations are never consulted.
NormalFormTuple normalize_word(const Word &w, int n);

/// Decodes an even permutation by peeling the top factor: the preimage of
/// m+2 determines k_m, then the factor is divided out. Rejects odd input.
NormalFormTuple encode_perm(const Permutation &p);

/// Mixed-radix rank: sum k_j * w_j with w_1 = 1, w_{j+1} = w_j * (j+2);
/// ranks run over [0, n!/2). Degrees up to 20 (so the count fits 64 bits).
std::uint64_t rank(const NormalFormTuple &t);

NormalFormTuple unrank(int n, std::uint64_t r);

/// n!/2 as the tuple count.
std::uint64_t tuple_count(int n);

using EnumerateFn =
    std::function<void(std::uint64_t, const NormalFormTuple &,
                       const Permutation &)>;

/// Visits every tuple in rank order with its evaluation.
void enumerate(int n, const EnumerateFn &fn);

/// Rank sub-range [lo, hi), for partitioned runs.
void enumerate_range(int n, std::uint64_t lo, std::uint64_t hi,
                     const EnumerateFn &fn);

/// "k1,k2,...,k(n-2)"; the degree is the digit count plus 2.
std::string format_tuple(const NormalFormTuple &t);
NormalFormTuple parse_tuple(const std::string &text);

} // namespace altnf
