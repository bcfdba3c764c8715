#include "altnf/word.hpp"

#include <algorithm>
#include <cctype>

#include "altnf/carmichael.hpp"
#include "altnf/error.hpp"

namespace altnf {

Word parse_word(const std::string &text) {
  Word w;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_ws();
  if (pos >= text.size())
    throw parse_error("empty word text; the identity is written \"e\"",
                      pos + 1);

  if (text[pos] == 'e') {
    ++pos;
    skip_ws();
    if (pos < text.size())
      throw parse_error("trailing input after \"e\"", pos + 1);
    return w;
  }

  bool alphabet_fixed = false;
  while (pos < text.size()) {
    std::size_t at = pos + 1;
    char c = text[pos];
    Alphabet alpha;
    if (c == 'x')
      alpha = Alphabet::X;
    else if (c == 'v')
      alpha = Alphabet::V;
    else
      throw parse_error(std::string("expected 'x' or 'v', got '") + c + "'",
                        at);
    if (alphabet_fixed && alpha != w.alphabet)
      throw parse_error("mixed alphabets in one word", at);
    ++pos;

    std::size_t digits_at = pos + 1;
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start)
      throw parse_error("expected a generator index", digits_at);
    int index = std::stoi(text.substr(start, pos - start));
    if (index < 1)
      throw parse_error("generator index must be >= 1", digits_at);

    long long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t exp_at = pos + 1;
      bool negative = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
      }
      start = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (pos == start)
        throw parse_error("expected an exponent", exp_at);
      exponent = std::stoll(text.substr(start, pos - start));
      if (negative)
        exponent = -exponent;
    }

    if (pos < text.size() &&
        !std::isspace(static_cast<unsigned char>(text[pos])))
      throw parse_error("expected whitespace between letters", pos + 1);

    int e = static_cast<int>(((exponent % 3) + 3) % 3);
    if (e != 0) {
      w.alphabet = alpha;
      alphabet_fixed = true;
      w.letters.push_back(Letter{index, e});
    }
    skip_ws();
  }
  return w;
}

std::string format_word(const Word &w) {
  if (w.empty())
    return "e";
  char tag = w.alphabet == Alphabet::X ? 'x' : 'v';
  std::string out;
  for (const Letter &l : w.letters) {
    if (!out.empty())
      out += ' ';
    out += tag;
    out += std::to_string(l.index);
    if (l.exponent != 1)
      out += "^" + std::to_string(l.exponent);
  }
  return out;
}

Word free_reduce(Word w) {
  std::vector<Letter> stack;
  stack.reserve(w.letters.size());
  for (const Letter &l : w.letters) {
    if (!stack.empty() && stack.back().index == l.index) {
      int e = (stack.back().exponent + l.exponent) % 3;
      if (e == 0)
        stack.pop_back();
      else
        stack.back().exponent = e;
    } else {
      stack.push_back(l);
    }
  }
  w.letters = std::move(stack);
  return w;
}

Word concat(const Word &a, const Word &b) {
  if (a.empty())
    return b;
  if (b.empty())
    return a;
  if (a.alphabet != b.alphabet)
    throw error("cannot concatenate words over different alphabets");
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Word inverse_word(const Word &w) {
  Word out;
  out.alphabet = w.alphabet;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(Letter{it->index, 3 - it->exponent});
  return out;
}

int min_degree(const Word &w) {
  int max_index = 1;
  for (const Letter &l : w.letters)
    max_index = std::max(max_index, l.index);
  return max_index + 2;
}

Permutation evaluate(const Word &w, int n) {
  if (n < 3)
    throw error("evaluation needs degree >= 3, got " + std::to_string(n));
  int need = min_degree(w);
  if (n < need) {
    char tag = w.alphabet == Alphabet::X ? 'x' : 'v';
    throw error(std::string("word uses ") + tag + std::to_string(need - 2) +
                ": needs degree >= " + std::to_string(need) + ", got " +
                std::to_string(n));
  }
  Permutation acc = Permutation::identity(n);
  for (const Letter &l : w.letters) {
    Permutation g = w.alphabet == Alphabet::X
                        ? Permutation::three_cycle(l.index, n)
                        : v_perm(l.index, n);
    if (l.exponent == 2)
      g = g.inverse();
    acc = acc * g;
  }
  return acc;
}

} // namespace altnf
