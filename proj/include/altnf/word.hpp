#pragma once

#include <string>
#include <vector>

#include "altnf/permutation.hpp"

namespace altnf {

/// The x-alphabet is the local generating set; the v-alphabet is the
/// Carmichael generating set.
enum class Alphabet { X, V };

/// One generator occurrence. The exponent is canonical in {1, 2}; 2 denotes
/// the inverse, since every generator has order 3.
struct Letter {
  int index;
  int exponent;

  bool operator==(const Letter &) const = default;
};

/// A word over a single alphabet. The empty word is the identity; its
/// alphabet tag is immaterial.
struct Word {
  Alphabet alphabet = Alphabet::X;
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  bool operator==(const Word &other) const {
    if (empty() && other.empty())
      return true;
    return alphabet == other.alphabet && letters == other.letters;
  }
};

/// Grammar: word := "e" | letter (WS letter)*
///          letter := ("x"|"v") INT ("^" SIGNED_INT)?
/// Exponents are reduced mod 3; a letter with exponent == 0 is dropped.
/// Mixing alphabets is rejected. Errors carry a 1-based position.
Word parse_word(const std::string &text);

/// Inverse mapping of parse_word; the empty word renders as "e".
std::string format_word(const Word &w);

/// Merges adjacent letters with equal index (exponents mod 3), cascading.
Word free_reduce(Word w);

/// Concatenation; alphabets must agree unless one side is empty.
Word concat(const Word &a, const Word &b);

/// Reversed word with inverted exponents (1 <-> 2).
Word inverse_word(const Word &w);

/// Smallest degree at which the word can be evaluated: max index + 2,
/// but at least 3.
int min_degree(const Word &w);

/// Evaluates under the standard assignment: x_i -> (i, i+1, i+2), and
/// v_i -> its defining conjugate. The rightmost letter acts first.
Permutation evaluate(const Word &w, int n);

} // namespace altnf
