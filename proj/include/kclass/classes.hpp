#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kclass/element_set.hpp"
#include "kclass/group.hpp"
#include "kclass/permutation.hpp"

namespace kclass {

/// Partition of an element set into orbits of a conjugation action.
struct OrbitPartition {
  /// orbit_of[i] is the orbit index of element i of the underlying set.
  std::vector<std::uint32_t> orbit_of;
  /// Element index of each orbit's lexicographically smallest member.
  std::vector<std::size_t> representative;
  std::vector<std::uint64_t> size;

  std::size_t count() const noexcept { return representative.size(); }
};

/// Orbits of <conjugators> acting by conjugation on `set`. Orbits are ordered
/// by their smallest member. Throws InvalidInput if a conjugate leaves the set.
OrbitPartition conjugation_orbits(const ElementSet& set, std::span<const Permutation> conjugators);

struct ClassDecomposition {
  std::vector<Permutation> representatives;
  std::vector<std::uint64_t> sizes;

  std::size_t k() const noexcept { return representatives.size(); }
  std::uint64_t total() const noexcept;
};

/// Conjugacy classes of G; cached on the group after the first call.
ClassDecomposition conjugacy_classes(const FiniteGroup& group, std::size_t cap = kDefaultCap);

/// Same as above, reusing an already materialized element set of the group.
ClassDecomposition conjugacy_classes(const FiniteGroup& group, const ElementSet& elements);

}  // namespace kclass
