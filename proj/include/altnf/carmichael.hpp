#pragma once

#include "altnf/permutation.hpp"
#include "altnf/report.hpp"
#include "altnf/word.hpp"

namespace altnf {

/// The Carmichael generator v_i as a degree-n permutation, evaluated from
/// its defining word x_{n-2} ... x_{i+1} x_i x_{i+1}^-1 ... x_{n-2}^-1.
/// It comes out as the 3-cycle (i, n-1, n). Requires 1 <= i <= n-2.
Permutation v_perm(int i, int n);

/// Rewrites an x-word over the v-alphabet via
/// x_i = v_{n-2}^-1 ... v_{i+1}^-1 v_i v_{i+1} ... v_{n-2}, freely reduced.
/// An exponent-2 letter substitutes the inverted defining word. n >= 4.
Word x_to_v(const Word &w, int n);

/// Inverse rewriting, v_i = x_{n-2} ... x_{i+1} x_i x_{i+1}^-1 ... x_{n-2}^-1.
Word v_to_x(const Word &w, int n);

/// Checks the Carmichael presentation identities on the v-images:
/// v_i^3 = 1 and (v_i v_j)^2 = 1 for all i != j. n >= 4.
VerificationReport check_carmichael(int n);

} // namespace altnf
