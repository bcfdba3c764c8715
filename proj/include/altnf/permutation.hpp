#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace altnf {

/// Permutation of {1,...,n}. Composition applies the right factor first:
/// (p * q)(v) == p(q(v)).
class Permutation {
public:
  /// Identity of the given degree.
  static Permutation identity(int n);

  /// The 3-cycle (i, i+1, i+2) on {1,...,n}; requires 1 <= i <= n-2.
  static Permutation three_cycle(int i, int n);

  /// From a one-line image list: images[v-1] is the image of v.
  /// Rejects non-bijections.
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(_images.size()); }

  /// Image of a point, 1-based.
  int operator()(int v) const;

  /// Preimage of a point, 1-based (linear scan; degrees here are small).
  int preimage(int v) const;

  Permutation inverse() const;

  /// Right factor applied first.
  friend Permutation operator*(const Permutation &p, const Permutation &q);

  bool is_identity() const;

  /// 0 for even, 1 for odd; computed as (n - #cycles) mod 2.
  int parity() const;
  bool even() const { return parity() == 0; }

  /// Smallest power k >= 1 with p^k == id.
  int order() const;

  /// Disjoint cycles, fixed points omitted, each cycle rotated to start at
  /// its minimum, cycles sorted by minimum.
  std::vector<std::vector<int>> cycles() const;

  const std::vector<int> &images() const { return _images; }

  /// Dense key for hashing; degree must be <= 16.
  std::uint64_t packed() const;

  bool operator==(const Permutation &other) const = default;
  bool operator<(const Permutation &other) const {
    return _images < other._images;
  }

private:
  std::vector<int> _images;
};

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const;
};

/// One-line form "a1,a2,...,an".
std::string format_perm(const Permutation &p);

/// Cycle form, e.g. "(1 2 4 5 3)" or "(1 3)(2 4)"; identity renders as "()".
std::string format_perm_cycles(const Permutation &p);

/// Parses either form. Cycle form starts with '('; anything else is read as
/// a one-line image list. Unlisted points in cycle form are fixed.
Permutation parse_perm(const std::string &text, int n);

std::ostream &operator<<(std::ostream &os, const Permutation &p);

} // namespace altnf
