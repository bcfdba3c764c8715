#include "altnf/carmichael.hpp"

#include "altnf/error.hpp"

namespace altnf {

namespace {

// x_{n-2} ... x_{i+1} x_i x_{i+1}^-1 ... x_{n-2}^-1
Word v_defining_word(int i, int n) {
  Word w;
  w.alphabet = Alphabet::X;
  for (int j = n - 2; j > i; --j)
    w.letters.push_back(Letter{j, 1});
  w.letters.push_back(Letter{i, 1});
  for (int j = i + 1; j <= n - 2; ++j)
    w.letters.push_back(Letter{j, 2});
  return w;
}

// v_{n-2}^-1 ... v_{i+1}^-1 v_i v_{i+1} ... v_{n-2}
Word x_defining_word(int i, int n) {
  Word w;
  w.alphabet = Alphabet::V;
  for (int j = n - 2; j > i; --j)
    w.letters.push_back(Letter{j, 2});
  w.letters.push_back(Letter{i, 1});
  for (int j = i + 1; j <= n - 2; ++j)
    w.letters.push_back(Letter{j, 1});
  return w;
}

void require_context(const char *who, int n) {
  if (n < 4)
    throw error(std::string(who) + " needs degree >= 4, got " +
                std::to_string(n));
}

Word substitute(const Word &w, int n, Word (*defining)(int, int),
                Alphabet expect, const char *who) {
  require_context(who, n);
  if (!w.empty() && w.alphabet != expect)
    throw error(std::string(who) + " expects a " +
                (expect == Alphabet::X ? "x" : "v") + "-alphabet word");
  Word out;
  for (const Letter &l : w.letters) {
    if (l.index > n - 2)
      throw error(std::string(who) + ": index " + std::to_string(l.index) +
                  " exceeds " + std::to_string(n - 2) + " for degree " +
                  std::to_string(n));
    Word sub = defining(l.index, n);
    if (l.exponent == 2)
      sub = inverse_word(sub);
    out = concat(out, sub);
  }
  return free_reduce(out);
}

} // namespace

Permutation v_perm(int i, int n) {
  if (n < 3 || i < 1 || i > n - 2)
    throw error("v_perm index " + std::to_string(i) + " out of range [1, " +
                std::to_string(n - 2) + "] for degree " + std::to_string(n));
  return evaluate(v_defining_word(i, n), n);
}

Word x_to_v(const Word &w, int n) {
  return substitute(w, n, x_defining_word, Alphabet::X, "x_to_v");
}

Word v_to_x(const Word &w, int n) {
  return substitute(w, n, v_defining_word, Alphabet::V, "v_to_x");
}

VerificationReport check_carmichael(int n) {
  require_context("check_carmichael", n);
  VerificationReport report;
  report.check = "carmichael";
  report.n = n;
  report.passed = true;

  std::vector<Permutation> v;
  v.reserve(n - 2);
  for (int i = 1; i <= n - 2; ++i)
    v.push_back(v_perm(i, n));

  std::int64_t cubes = 0;
  std::int64_t pairs = 0;
  for (int i = 1; i <= n - 2 && report.passed; ++i) {
    const Permutation &vi = v[i - 1];
    ++cubes;
    if (!(vi * vi * vi).is_identity()) {
      report.passed = false;
      report.counterexample["identity"] = "v" + std::to_string(i) + "^3";
      report.counterexample["perm"] = format_perm_cycles(vi);
    }
  }
  for (int i = 1; i <= n - 2 && report.passed; ++i) {
    for (int j = 1; j <= n - 2 && report.passed; ++j) {
      if (i == j)
        continue;
      ++pairs;
      Permutation prod = v[i - 1] * v[j - 1];
      if (!(prod * prod).is_identity()) {
        report.passed = false;
        report.counterexample["identity"] =
            "(v" + std::to_string(i) + " v" + std::to_string(j) + ")^2";
        report.counterexample["perm"] = format_perm_cycles(prod);
      }
    }
  }
  report.stats["cube_checks"] = cubes;
  report.stats["pair_checks"] = pairs;
  return report;
}

} // namespace altnf
