#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "altnf/permutation.hpp"
#include "altnf/report.hpp"
#include "altnf/word.hpp"

namespace altnf {

/// The defining relation families of the presentation:
///   R: x_i^3 = 1
///   S: (x_i x_{i+1})^2 = 1
///   Q: x_i x_j = x_j x_i for j - i >= 3
///   T: x_i x_{i+1}^-1 x_{i+2} = x_{i+2} x_i
///   Tprime: x_{i+1} = x_{i+2} x_i^-1 x_{i+2}^-1 x_i   (T rearranged; used in
///           derivations, not part of the defining list)
enum class RelationKind { R, S, Q, T, Tprime };

struct RelationInstance {
  RelationKind kind;
  int i;
  int j = 0; // Q only
  Word lhs;
  Word rhs; // empty for relator-style kinds (R, S)

  std::string name() const;
};

/// Validated single instance; `j` is meaningful only for Q.
RelationInstance make_instance(RelationKind kind, int i, int j, int n);

/// The defining instances of S_n^+, in order: all R, all S, all Q (i < j,
/// lexicographic), all T. n >= 3.
std::vector<RelationInstance> relation_instances(int n);

/// Substitutes images[i-1] for x_i in every defining instance of S_m^+ where
/// m = images.size() + 2. The images may have any common degree (the shifted
/// assignment checks use degree > m).
VerificationReport check_images(const std::vector<Permutation> &images,
                                const std::string &check_name);

/// images must be one degree-n permutation per generator (length n - 2).
VerificationReport check_assignment(const std::vector<Permutation> &images,
                                    int n);

/// A letter x_{i+offset}^exponent inside a parametric derivation chain.
struct SymbolicLetter {
  int offset;
  int exponent;
};

/// Which relation instance a step invokes, with indices relative to the
/// chain parameter i.
struct RelationRef {
  RelationKind kind;
  int offset;
  int offset2 = 0; // Q only
};

struct DerivationStep {
  std::vector<SymbolicLetter> word;
  RelationRef just;
  std::string note;
};

/// A transformation chain transcribed from the correctness argument. The
/// start word is unjustified; every step must evaluate equal to its
/// predecessor and cite the relation instance that licenses the rewrite.
struct DerivationScript {
  std::string name;
  std::vector<SymbolicLetter> start;
  std::vector<DerivationStep> steps;
  bool reduces_to_identity = false; // chain ends in a word freely equal to e
  bool fixed_param = false;         // only i = 1 admissible
  int min_n = 5;
  int param_bound_sub = 4; // admissible 1 <= i <= n - param_bound_sub

  int max_param(int n) const;
};

/// The chains shipped with the library: "theorem2" (the induction step for
/// the T family), "xtop_square" (x_{i+1}^2 = x_i x_{i+1} x_i), "collision"
/// (x_{i+2} x_{i+1} x_i x_{i+2} pushed past the top letter) and
/// "n4_special" (x3 x2 x1^2 x3, the two-generator boundary case).
const std::vector<DerivationScript> &builtin_scripts();

const DerivationScript &find_script(const std::string &name);

/// Level-1: consecutive words evaluate to the same permutation and every
/// cited instance holds, both at the faithful degree max(n, max index + 2).
/// Level-2 (best effort, reported in stats.level2_matched): the rewrite is
/// syntactically a replacement licensed by the cited instance, modulo free
/// reduction.
VerificationReport verify_derivation(const DerivationScript &script, int i,
                                     int n);

/// Local stationarity at degree n: the two one-step windows generate
/// subgroups of order (n-1)!/2, the index-shift assignment satisfies every
/// relation of the smaller presentation, and distant pairs commute.
VerificationReport check_stationarity(int n);

/// Exhaustive search for generating tuples satisfying the presentation,
/// counted up to simultaneous conjugacy. 5 <= n <= 7; throws a distinct
/// error when the node budget runs out.
VerificationReport census_solutions(int n, std::uint64_t budget = 50000000);

} // namespace altnf
