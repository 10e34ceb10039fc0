#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace kclass {

using Point = std::uint16_t;

/// Bijection of {0, ..., degree-1} stored as its image list.
///
/// Products are read left to right: `compose(p, q)` applies p first, then q.
/// Ordering is lexicographic on the image list, which is also the canonical
/// order used to pick class representatives.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidInput unless `images` is a bijection of {0, ..., n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Builds a permutation from disjoint cycles, e.g. {{0, 1}, {2, 3, 4}}.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// Disjoint cycles of length >= 2, each starting at its smallest point.
  std::vector<std::vector<Point>> cycles() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);

  std::vector<Point> images_;
};

/// result(x) = q(p(x)).
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// a * g * a^-1 in left-to-right notation.
Permutation conjugate(const Permutation& g, const Permutation& a);

Permutation power(const Permutation& p, std::uint64_t e);

/// Least m >= 1 with p^m = 1 (lcm of the cycle lengths).
std::uint64_t element_order(const Permutation& p);

}  // namespace kclass
