#include "altnf/normal_form.hpp"

#include <algorithm>
#include <sstream>

#include "altnf/error.hpp"

namespace altnf {

namespace {

void validate_digits(int n, const std::vector<int> &k) {
  if (n < 3)
    throw error("normal form tuples need degree n >= 3, got n = " +
                std::to_string(n));
  if (static_cast<int>(k.size()) != n - 2)
    throw error("tuple for degree " + std::to_string(n) + " needs " +
                std::to_string(n - 2) + " digits, got " +
                std::to_string(k.size()));
  for (int j = 1; j <= n - 2; ++j) {
    int v = k[j - 1];
    if (v < 0 || v > j + 1)
      throw error("digit k_" + std::to_string(j) + " = " + std::to_string(v) +
                  " out of range [0, " + std::to_string(j + 1) + "]");
  }
}

using Letters = std::vector<Letter>;

Letters reduce(const Letters &in) {
  Letters out;
  for (const Letter &l : in) {
    if (!out.empty() && out.back().index == l.index) {
      int e = (out.back().exponent + l.exponent) % 3;
      out.pop_back();
      if (e != 0)
        out.push_back({l.index, e});
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Letters y_letters(int m, int k) {
  Letters out;
  if (k == m + 1)
    return out;
  for (int i = m; i >= std::max(k, 1); --i)
    out.push_back({i, 1});
  if (k == 0)
    out.push_back({1, 1}); // joins the trailing x_1 to make x_1^2
  return reduce(out);
}

/// Concatenation of the factors y_{1,k_1} .. y_{m,k_m}.
Letters prefix_letters(const std::vector<int> &digits, int m) {
  Letters out;
  for (int j = 1; j <= m; ++j) {
    Letters f = y_letters(j, digits[j - 1]);
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

/// Moves one x_t from the left of `body` to its right, where `body` only
/// uses indices <= t-2. Distant letters commute; each crossing of an
/// x_{t-2} unit leaves x_{t-2} x_{t-1}^2 behind.
Letters cross_right(int t, const Letters &body) {
  Letters out;
  for (const Letter &l : body) {
    if (l.index <= t - 3) {
      out.push_back(l);
    } else {
      for (int u = 0; u < l.exponent; ++u) {
        out.push_back({t - 2, 1});
        out.push_back({t - 1, 2});
      }
    }
  }
  return out;
}

Letters splice(const Letters &w, std::size_t pos, std::size_t count,
               const Letters &repl) {
  Letters out(w.begin(), w.begin() + pos);
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), w.begin() + pos + count, w.end());
  return out;
}

void append(Letters &w, std::initializer_list<Letter> tail) {
  w.insert(w.end(), tail.begin(), tail.end());
}

std::vector<int> normalize_rec(Letters w, int t);

/// Base case over x_1, x_2 only: expand x_2 squares, fuse x_2 .. x_2
/// pairs through the single x_1 letter between them, then read the
/// residual x_1^a [x_2 x_1^b] off directly.
std::vector<int> normalize_base2(Letters w) {
  for (;;) {
    w = reduce(w);
    std::size_t sq = w.size();
    for (std::size_t p = 0; p < w.size(); ++p)
      if (w[p].index == 2 && w[p].exponent == 2) {
        sq = p;
        break;
      }
    if (sq != w.size()) {
      w = splice(w, sq, 1, {{1, 1}, {2, 1}, {1, 1}});
      continue;
    }
    std::vector<std::size_t> tops;
    for (std::size_t p = 0; p < w.size(); ++p)
      if (w[p].index == 2)
        tops.push_back(p);
    if (tops.size() <= 1)
      break;
    // Between consecutive x_2 letters of a reduced word sits exactly one
    // x_1^e letter.
    std::size_t p1 = tops[0], p2 = tops[1];
    int e = w[p1 + 1].exponent;
    Letters repl;
    if (e == 1)
      repl = {{1, 2}}; // x_2 x_1 x_2 = x_1^2
    else
      repl = {{1, 2}, {2, 1}, {1, 2}}; // x_2 x_1^2 x_2 = x_1^2 x_2 x_1^2
    w = splice(w, p1, p2 - p1 + 1, repl);
  }
  int a = 0;
  std::size_t idx = 0;
  if (idx < w.size() && w[idx].index == 1) {
    a = w[idx].exponent;
    ++idx;
  }
  int k2 = 3;
  if (idx < w.size()) { // a single trailing x_2 x_1^b
    ++idx;
    int b = 0;
    if (idx < w.size())
      b = w[idx].exponent;
    k2 = 2 - b;
  }
  return {2 - a, k2};
}

std::vector<int> normalize_rec(Letters w, int t) {
  if (t == 1) {
    w = reduce(w);
    int a = w.empty() ? 0 : w.front().exponent;
    return {2 - a};
  }
  if (t == 2)
    return normalize_base2(std::move(w));

  // Phase 1: drive the count of x_t letters down to at most one. The
  // total exponent carried by index t strictly decreases each round.
  for (;;) {
    w = reduce(w);
    std::size_t sq = w.size();
    for (std::size_t p = 0; p < w.size(); ++p)
      if (w[p].index == t && w[p].exponent == 2) {
        sq = p;
        break;
      }
    if (sq != w.size()) {
      // x_t^2 = x_{t-1} x_t x_{t-1}
      w = splice(w, sq, 1, {{t - 1, 1}, {t, 1}, {t - 1, 1}});
      continue;
    }
    std::vector<std::size_t> tops;
    for (std::size_t p = 0; p < w.size(); ++p)
      if (w[p].index == t)
        tops.push_back(p);
    if (tops.size() <= 1)
      break;

    std::size_t p1 = tops[0], p2 = tops[1];
    // Normalize the stretch between the two x_t letters one level down,
    // slide the left x_t through all factors but the last, and resolve
    // the collision with the final factor.
    Letters middle(w.begin() + p1 + 1, w.begin() + p2);
    std::vector<int> digits = normalize_rec(middle, t - 1);
    int j = digits[t - 2];
    Letters repl = cross_right(t, prefix_letters(digits, t - 2));
    if (j == t) {
      // Empty final factor: the x_t letters meet, and the square expands.
      append(repl, {{t - 1, 1}, {t, 1}, {t - 1, 1}});
    } else {
      Letters f = y_letters(t - 1, j);
      if (f.size() == 1) {
        // x_t x_{t-1} x_t = x_{t-1}^2
        append(repl, {{t - 1, 2}});
      } else if (t == 3 && f[1].exponent == 2) {
        // x_3 x_2 x_1^2 x_3 = x_2 x_3 x_2 x_1^2 (the degree-4 tail)
        append(repl, {{2, 1}, {3, 1}, {2, 1}, {1, 2}});
      } else {
        // x_t x_{t-1} x_{t-2} x_t = x_{t-1}^2 x_{t-2} x_t x_{t-1}^2;
        // the rest of the factor commutes past the surviving x_t.
        append(repl, {{t - 1, 2}, {t - 2, 1}, {t, 1}, {t - 1, 2}});
        repl.insert(repl.end(), f.begin() + 2, f.end());
      }
    }
    w = splice(w, p1, p2 - p1 + 1, repl);
  }

  // Phase 2: zero or one x_t letter left.
  std::size_t p = w.size();
  for (std::size_t q = 0; q < w.size(); ++q)
    if (w[q].index == t) {
      p = q;
      break;
    }
  if (p == w.size()) {
    std::vector<int> digits = normalize_rec(std::move(w), t - 1);
    digits.push_back(t + 1);
    return digits;
  }
  Letters before(w.begin(), w.begin() + p);
  Letters after(w.begin() + p + 1, w.end());
  std::vector<int> digits = normalize_rec(std::move(after), t - 1);
  int kt = digits[t - 2];
  Letters crossed = cross_right(t, prefix_letters(digits, t - 2));
  before.insert(before.end(), crossed.begin(), crossed.end());
  std::vector<int> low = normalize_rec(std::move(before), t - 1);
  low.push_back(kt);
  return low;
}

std::vector<std::uint64_t> rank_weights(int n) {
  std::vector<std::uint64_t> w(n - 2);
  w[0] = 1;
  for (int j = 1; j < n - 2; ++j)
    w[j] = w[j - 1] * static_cast<std::uint64_t>(j + 2);
  return w;
}

void check_rankable(int n) {
  if (n > 20)
    throw error("ranking supports degrees up to 20, got n = " +
                std::to_string(n));
}

} // namespace

NormalFormTuple nf_tuple(int n, std::vector<int> k) {
  validate_digits(n, k);
  return {n, std::move(k)};
}

NormalFormTuple identity_tuple(int n) {
  if (n < 3)
    throw error("normal form tuples need degree n >= 3, got n = " +
                std::to_string(n));
  std::vector<int> k(n - 2);
  for (int j = 1; j <= n - 2; ++j)
    k[j - 1] = j + 1;
  return {n, std::move(k)};
}

Word y_word(int m, int k) {
  if (m < 1)
    throw error("y_word needs m >= 1, got m = " + std::to_string(m));
  if (k < 0 || k > m + 1)
    throw error("y_word digit " + std::to_string(k) + " out of range [0, " +
                std::to_string(m + 1) + "]");
  Word w;
  w.letters = y_letters(m, k);
  return w;
}

Word nf_to_word(const NormalFormTuple &t) {
  validate_digits(t.n, t.k);
  Word w;
  w.letters = prefix_letters(t.k, t.n - 2);
  return free_reduce(w);
}

Permutation nf_evaluate(const NormalFormTuple &t) {
  return evaluate(nf_to_word(t), t.n);
}

NormalFormTuple normalize_word(const Word &w, int n) {
  if (n < 3)
    throw error("normalization needs degree n >= 3, got n = " +
                std::to_string(n));
  if (w.alphabet != Alphabet::X && !w.letters.empty())
    throw error("normalization expects a word over the x alphabet");
  for (const Letter &l : w.letters)
    if (l.index > n - 2)
      throw error("letter x" + std::to_string(l.index) +
                  " needs degree n >= " + std::to_string(l.index + 2) +
                  ", got n = " + std::to_string(n));
  return {n, normalize_rec(w.letters, n - 2)};
}

NormalFormTuple encode_perm(const Permutation &p) {
  int n = p.degree();
  if (n < 3)
    throw error("encoding needs degree n >= 3, got n = " + std::to_string(n));
  if (!p.even())
    throw error("permutation " + format_perm_cycles(p) +
                " is odd; only even permutations have a normal form");
  std::vector<int> k(n - 2);
  Permutation rest = p;
  for (int m = n - 2; m >= 1; --m) {
    int q = rest.preimage(m + 2);
    int km;
    if (q == m + 2)
      km = m + 1;
    else if (q == 1)
      km = 0;
    else
      km = q - 1;
    k[m - 1] = km;
    rest = rest * evaluate(y_word(m, km), n).inverse();
  }
  if (!rest.is_identity())
    throw error("internal defect: nonidentity residue after peeling " +
                format_perm(p));
  return {n, std::move(k)};
}

std::uint64_t rank(const NormalFormTuple &t) {
  validate_digits(t.n, t.k);
  check_rankable(t.n);
  std::vector<std::uint64_t> w = rank_weights(t.n);
  std::uint64_t r = 0;
  for (int j = 0; j < t.n - 2; ++j)
    r += static_cast<std::uint64_t>(t.k[j]) * w[j];
  return r;
}

NormalFormTuple unrank(int n, std::uint64_t r) {
  if (n < 3)
    throw error("normal form tuples need degree n >= 3, got n = " +
                std::to_string(n));
  check_rankable(n);
  std::uint64_t total = tuple_count(n);
  if (r >= total)
    throw error("rank " + std::to_string(r) + " out of range [0, " +
                std::to_string(total) + ") for degree " + std::to_string(n));
  std::vector<int> k(n - 2);
  for (int j = 1; j <= n - 2; ++j) {
    std::uint64_t radix = static_cast<std::uint64_t>(j + 2);
    k[j - 1] = static_cast<int>(r % radix);
    r /= radix;
  }
  return {n, std::move(k)};
}

std::uint64_t tuple_count(int n) {
  if (n < 3)
    throw error("normal form tuples need degree n >= 3, got n = " +
                std::to_string(n));
  check_rankable(n);
  std::uint64_t total = 1;
  for (int j = 1; j <= n - 2; ++j)
    total *= static_cast<std::uint64_t>(j + 2);
  return total;
}

void enumerate(int n, const EnumerateFn &fn) {
  if (n < 3)
    throw error("enumeration needs degree n >= 3, got n = " +
                std::to_string(n));
  check_rankable(n);
  // Factor evaluations, indexed [m][k].
  std::vector<std::vector<Permutation>> factors(n - 1);
  for (int m = 1; m <= n - 2; ++m) {
    factors[m].reserve(m + 2);
    for (int k = 0; k <= m + 1; ++k)
      factors[m].push_back(evaluate(y_word(m, k), n));
  }
  std::vector<int> digits(n - 2);
  std::uint64_t next = 0;
  // Right-to-left suffix products: the digit at level m multiplies on the
  // left of everything above it, and level 1 varies fastest in rank order.
  std::function<void(int, const Permutation &)> descend =
      [&](int m, const Permutation &suffix) {
        if (m == 0) {
          fn(next++, NormalFormTuple{n, digits}, suffix);
          return;
        }
        for (int k = 0; k <= m + 1; ++k) {
          digits[m - 1] = k;
          descend(m - 1, factors[m][k] * suffix);
        }
      };
  descend(n - 2, Permutation::identity(n));
}

void enumerate_range(int n, std::uint64_t lo, std::uint64_t hi,
                     const EnumerateFn &fn) {
  std::uint64_t total = tuple_count(n);
  if (lo > hi || hi > total)
    throw error("range " + std::to_string(lo) + ".." + std::to_string(hi) +
                " out of bounds for " + std::to_string(total) + " tuples");
  for (std::uint64_t r = lo; r < hi; ++r) {
    NormalFormTuple t = unrank(n, r);
    fn(r, t, nf_evaluate(t));
  }
}

std::string format_tuple(const NormalFormTuple &t) {
  std::ostringstream out;
  for (int j = 0; j < t.n - 2; ++j) {
    if (j)
      out << ',';
    out << t.k[j];
  }
  return out.str();
}

NormalFormTuple parse_tuple(const std::string &text) {
  std::vector<int> k;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ',')
      ++pos;
    std::string piece = text.substr(start, pos - start);
    if (piece.empty() || piece.find_first_not_of("0123456789") !=
                             std::string::npos)
      throw parse_error("expected a digit list like \"1,2,0\"", start + 1);
    k.push_back(std::stoi(piece));
    if (pos < text.size())
      ++pos; // skip comma
  }
  if (k.empty())
    throw parse_error("empty tuple", 1);
  int n = static_cast<int>(k.size()) + 2;
  validate_digits(n, k);
  return {n, std::move(k)};
}

} // namespace altnf
