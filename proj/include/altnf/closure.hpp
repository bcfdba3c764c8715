#pragma once

#include <cstdint>
#include <vector>

#include "altnf/permutation.hpp"

namespace altnf {

/// Breadth-first closure of the subgroup generated by `gens` (all of one
/// degree). In a finite group the generated submonoid is the subgroup, so
/// right-multiplying by the generators alone suffices.
std::vector<Permutation> subgroup_closure(const std::vector<Permutation> &gens);

std::uint64_t subgroup_order(const std::vector<Permutation> &gens);

} // namespace altnf
