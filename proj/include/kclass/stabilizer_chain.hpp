#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "kclass/permutation.hpp"

namespace kclass {

/// Base and strong generating set built by the deterministic Schreier-Sims
/// algorithm. Used for group orders and membership tests; element enumeration
/// itself goes through the breadth-first closure.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  mpz_class order() const;
  bool contains(const Permutation& p) const;

  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_sizes() const;

 private:
  struct Level {
    Point base_point;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    // transversal[x] maps base_point to x when x is in the orbit.
    std::vector<std::optional<Permutation>> transversal;
  };

  /// Sifts g through levels [from, end); returns the residue and the level
  /// where sifting stopped (levels_.size() if it went all the way through).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;
  void rebuild_orbit(Level& level) const;
  void build(std::span<const Permutation> generators);

  std::size_t degree_;
  std::vector<Level> levels_;
};

}  // namespace kclass
