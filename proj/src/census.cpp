#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "altnf/closure.hpp"
#include "altnf/error.hpp"
#include "altnf/presentation.hpp"

namespace altnf {

namespace {

using Tuple = std::vector<Permutation>;

Permutation conjugate(const Permutation &g, const Permutation &p) {
  return g * p * g.inverse();
}

// Deterministic orbit key: the minimal conjugate of the tuple over the
// given conjugator set, flattened to one image list.
std::vector<int> orbit_key(const Tuple &tuple,
                           const std::vector<Permutation> &conjugators) {
  std::vector<int> best;
  for (const Permutation &g : conjugators) {
    std::vector<int> flat;
    for (const Permutation &p : tuple) {
      Permutation c = conjugate(g, p);
      flat.insert(flat.end(), c.images().begin(), c.images().end());
    }
    if (best.empty() || flat < best)
      best = std::move(flat);
  }
  return best;
}

std::uint64_t half_factorial(int n) {
  std::uint64_t out = 1;
  for (int k = 3; k <= n; ++k)
    out *= static_cast<std::uint64_t>(k);
  return out;
}

struct Search {
  int n;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  const std::vector<Permutation> &order3;
  Tuple current;
  std::vector<Tuple> solutions; // all anchored at the class representative

  void spend() {
    if (++nodes > budget)
      throw error("census budget of " + std::to_string(budget) +
                  " nodes exhausted at degree " + std::to_string(n));
  }

  bool admissible(const Permutation &candidate) const {
    int k = static_cast<int>(current.size()) + 1; // position being filled
    if (k >= 2) {
      Permutation prod = current[k - 2] * candidate;
      if (!(prod * prod).is_identity())
        return false; // S(k-1)
    }
    if (k >= 3) {
      // T(k-2): x_{k-2} x_{k-1}^-1 x_k = x_k x_{k-2}
      const Permutation &a = current[k - 3];
      const Permutation &b = current[k - 2];
      if (!(a * b.inverse() * candidate == candidate * a))
        return false;
    }
    for (int i = 1; i <= k - 3; ++i) // Q(i, k)
      if (!(current[i - 1] * candidate == candidate * current[i - 1]))
        return false;
    return true;
  }

  void extend() {
    if (static_cast<int>(current.size()) == n - 2) {
      if (subgroup_order(current) == half_factorial(n))
        solutions.push_back(current);
      return;
    }
    for (const Permutation &candidate : order3) {
      spend();
      if (!admissible(candidate))
        continue;
      current.push_back(candidate);
      extend();
      current.pop_back();
    }
  }
};

} // namespace

VerificationReport census_solutions(int n, std::uint64_t budget) {
  if (n < 5 || n > 7)
    throw error("census_solutions supports 5 <= n <= 7, got " +
                std::to_string(n));

  std::vector<Permutation> alternating;
  {
    std::vector<Permutation> gens;
    for (int i = 1; i <= n - 2; ++i)
      gens.push_back(Permutation::three_cycle(i, n));
    alternating = subgroup_closure(gens);
  }

  std::vector<Permutation> order3;
  for (const Permutation &p : alternating)
    if (!p.is_identity() && (p * p * p).is_identity())
      order3.push_back(p);
  std::sort(order3.begin(), order3.end());

  // One representative per conjugacy class of order-3 elements; both classes
  // are whole symmetric-group classes (an odd element centralizes each), so
  // cycle type determines the class.
  std::vector<Permutation> reps{parse_perm("(1 2 3)", n)};
  if (n >= 6)
    reps.push_back(parse_perm("(1 2 3)(4 5 6)", n));

  Permutation odd_swap = parse_perm("(1 2)", n);

  VerificationReport report;
  report.check = "solutions";
  report.n = n;

  std::uint64_t nodes = 0;
  std::int64_t total_solutions = 0;
  // Orbits are counted up to relabeling of the permuted points, i.e. under
  // simultaneous conjugation by the full symmetric group; the finer
  // alternating-group count is reported alongside.
  std::int64_t orbits = 0;
  std::int64_t orbits_alt = 0;

  for (const Permutation &rep : reps) {
    // Centralizers of the representative: even conjugators give the
    // alternating-group orbits, even-or-odd the symmetric-group orbits.
    std::vector<Permutation> cent_even, cent_all;
    for (const Permutation &g : alternating) {
      if (conjugate(g, rep) == rep) {
        cent_even.push_back(g);
        cent_all.push_back(g);
      }
      Permutation h = g * odd_swap;
      if (conjugate(h, rep) == rep)
        cent_all.push_back(h);
    }

    Search search{n, budget, 0, order3, {rep}, {}};
    search.extend();
    nodes += search.nodes;
    total_solutions += static_cast<std::int64_t>(search.solutions.size());

    std::map<std::vector<int>, Tuple> by_key, by_key_sn;
    for (const Tuple &tuple : search.solutions) {
      by_key.emplace(orbit_key(tuple, cent_even), tuple);
      by_key_sn.emplace(orbit_key(tuple, cent_all), tuple);
    }
    orbits += static_cast<std::int64_t>(by_key_sn.size());
    orbits_alt += static_cast<std::int64_t>(by_key.size());

    for (const auto &[key, tuple] : by_key_sn) {
      std::vector<std::string> formatted;
      for (const Permutation &p : tuple)
        formatted.push_back(format_perm_cycles(p));
      report.representatives.push_back(std::move(formatted));
    }
  }

  std::int64_t expected = n == 6 ? 2 : 1;
  report.passed = orbits == expected;
  if (!report.passed) {
    report.counterexample["reason"] = "orbit count differs from expected";
    report.counterexample["found"] = std::to_string(orbits);
    report.counterexample["expected"] = std::to_string(expected);
  }
  report.stats["orbits"] = orbits;
  report.stats["orbits_alternating"] = orbits_alt;
  report.stats["expected_orbits"] = expected;
  report.stats["solutions"] = total_solutions;
  report.stats["nodes"] = static_cast<std::int64_t>(nodes);
  report.stats["order3_elements"] = static_cast<std::int64_t>(order3.size());
  return report;
}

} // namespace altnf
