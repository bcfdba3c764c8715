#include "altnf/closure.hpp"

#include <unordered_set>

#include "altnf/error.hpp"

namespace altnf {

std::vector<Permutation> subgroup_closure(
    const std::vector<Permutation> &gens) {
  if (gens.empty())
    throw error("subgroup_closure needs at least one generator");
  int n = gens.front().degree();
  for (const Permutation &g : gens)
    if (g.degree() != n)
      throw error("subgroup_closure: generator degrees differ");

  std::vector<Permutation> elements{Permutation::identity(n)};
  std::unordered_set<Permutation, PermutationHash> seen{elements.front()};
  // Frontier BFS; elements doubles as the queue.
  for (std::size_t head = 0; head < elements.size(); ++head) {
    Permutation current = elements[head];
    for (const Permutation &g : gens) {
      Permutation next = current * g;
      if (seen.insert(next).second)
        elements.push_back(std::move(next));
    }
  }
  return elements;
}

std::uint64_t subgroup_order(const std::vector<Permutation> &gens) {
  return subgroup_closure(gens).size();
}

} // namespace altnf
