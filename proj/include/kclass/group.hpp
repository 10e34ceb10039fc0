#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "kclass/element_set.hpp"
#include "kclass/permutation.hpp"

namespace kclass {

/// Default bound on the number of elements any single enumeration may produce.
inline constexpr std::size_t kDefaultCap = 5'000'000;

class StabilizerChain;
struct ClassDecomposition;

/// Permutation group given by generators. Derived data (stabilizer chain,
/// class decomposition) is computed on first use and shared between copies.
class FiniteGroup {
 public:
  /// Throws InvalidInput if a generator has the wrong degree.
  FiniteGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  /// Exact order, from the stabilizer chain (no enumeration, no cap).
  mpz_class order() const;
  bool contains(const Permutation& p) const;
  const StabilizerChain& chain() const;

  /// Cached conjugacy classes (see classes.hpp).
  std::shared_ptr<const ClassDecomposition> cached_classes() const;
  void store_classes(std::shared_ptr<const ClassDecomposition> classes) const;

 private:
  struct Cache;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

FiniteGroup symmetric_group(std::size_t n);
FiniteGroup alternating_group(std::size_t n);
FiniteGroup cyclic_group(std::size_t n);

/// Breadth-first closure of the generators under right multiplication.
/// Throws CapExceeded as soon as the closure would hold more than `cap` elements.
ElementSet group_elements(const FiniteGroup& group, std::size_t cap = kDefaultCap);

/// |G|; throws CapExceeded if it is larger than `cap`.
std::uint64_t group_order(const FiniteGroup& group, std::size_t cap = kDefaultCap);

/// True iff every conjugate of a generator of T by a generator of A lies in <T>.
/// Throws InvalidInput if some generator of T is not in A.
bool is_normal_subgroup(const FiniteGroup& ambient, std::span<const Permutation> subgroup_generators);

}  // namespace kclass
