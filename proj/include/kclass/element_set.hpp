#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kclass/permutation.hpp"

namespace kclass {

/// Largest degree whose elements can be materialized (one byte per point).
inline constexpr std::size_t kMaxEnumerationDegree = 256;

/// Insertion-ordered set of permutations of a fixed degree.
///
/// Elements are stored contiguously in their canonical encoding (the image
/// list as fixed-width bytes) and indexed by an open-addressing hash table, so
/// membership is a hash probe plus one memcmp.
class ElementSet {
 public:
  using Key = std::span<const std::uint8_t>;

  explicit ElementSet(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  Key key(std::size_t index) const { return {storage_.data() + index * degree_, degree_}; }
  Permutation at(std::size_t index) const;

  std::optional<std::size_t> find(Key key) const;
  std::optional<std::size_t> find(const Permutation& p) const;
  bool contains(const Permutation& p) const { return find(p).has_value(); }

  /// Returns (index, inserted).
  std::pair<std::size_t, bool> insert(Key key);
  std::pair<std::size_t, bool> insert(const Permutation& p);

  void reserve(std::size_t n);

  static std::vector<std::uint8_t> encode(const Permutation& p);

 private:
  static constexpr std::uint32_t kEmpty = UINT32_MAX;

  std::uint64_t hash(Key key) const noexcept;
  void grow();

  std::size_t degree_;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> storage_;
  std::vector<std::uint32_t> slots_;
  std::size_t mask_ = 0;
};

}  // namespace kclass
