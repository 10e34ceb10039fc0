#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "kclass/classes.hpp"
#include "kclass/group.hpp"

namespace kclass {

struct VerificationReport;

/// A group A together with generators of a normal subgroup T.
class AmbientPair {
 public:
  /// Throws ValidationError unless <T> is normal in A; InvalidInput if T is not inside A.
  AmbientPair(FiniteGroup ambient, std::vector<Permutation> socle_generators);

  const FiniteGroup& ambient() const noexcept { return ambient_; }
  const FiniteGroup& socle() const noexcept { return socle_; }
  const std::vector<Permutation>& socle_generators() const noexcept { return socle_.generators(); }
  bool validated() const noexcept { return true; }

  /// |A| / |T|; equals |Out(T)| when A = Aut(T) and T is simple.
  mpz_class outer_index() const;

 private:
  FiniteGroup ambient_;
  FiniteGroup socle_;
};

/// Number of orbits of A acting by conjugation on `subset`.
std::size_t orbit_count_on_subset(const FiniteGroup& ambient, const ElementSet& subset);

/// k*(T): number of A-conjugation orbits on T.
std::size_t k_star(const AmbientPair& pair, std::size_t cap = kDefaultCap);

/// The set of element orders of T; e(T) is its size.
std::set<std::uint64_t> element_order_spectrum(const FiniteGroup& group, std::size_t cap = kDefaultCap);
std::set<std::uint64_t> element_order_spectrum(const ElementSet& elements);

/// Everything about one pair that needs T enumerated once.
struct PairCounts {
  std::size_t k_socle;
  std::size_t k_star;
  std::set<std::uint64_t> orders;
};

PairCounts pair_counts(const AmbientPair& pair, std::size_t cap = kDefaultCap);

/// k(T), k(A), k*(T) and the check k*(T) >= k(T) / |A:T|.
VerificationReport class_fusion_summary(const AmbientPair& pair, std::size_t cap = kDefaultCap);

}  // namespace kclass
