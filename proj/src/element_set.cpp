#include "kclass/element_set.hpp"

#include <cstring>

#include "kclass/errors.hpp"

namespace kclass {

ElementSet::ElementSet(std::size_t degree) : degree_(degree) {
  if (degree > kMaxEnumerationDegree) {
    throw InvalidInput("degree " + std::to_string(degree) + " exceeds the enumeration limit of " +
                       std::to_string(kMaxEnumerationDegree));
  }
  slots_.assign(16, kEmpty);
  mask_ = slots_.size() - 1;
}

std::vector<std::uint8_t> ElementSet::encode(const Permutation& p) {
  std::vector<std::uint8_t> out(p.degree());
  for (std::size_t x = 0; x < p.degree(); ++x) out[x] = static_cast<std::uint8_t>(p(static_cast<Point>(x)));
  return out;
}

Permutation ElementSet::at(std::size_t index) const {
  auto k = key(index);
  return Permutation(std::vector<Point>(k.begin(), k.end()));
}

std::uint64_t ElementSet::hash(Key key) const noexcept {
  // FNV-1a over 8-byte words, finished with a murmur-style mix.
  std::uint64_t h = 1469598103934665603ULL;
  std::size_t i = 0;
  for (; i + 8 <= key.size(); i += 8) {
    std::uint64_t w;
    std::memcpy(&w, key.data() + i, 8);
    h = (h ^ w) * 1099511628211ULL;
  }
  for (; i < key.size(); ++i) h = (h ^ key[i]) * 1099511628211ULL;
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return h;
}

std::optional<std::size_t> ElementSet::find(Key k) const {
  if (k.size() != degree_) return std::nullopt;
  for (std::size_t slot = hash(k) & mask_;; slot = (slot + 1) & mask_) {
    std::uint32_t idx = slots_[slot];
    if (idx == kEmpty) return std::nullopt;
    if (std::memcmp(storage_.data() + std::size_t{idx} * degree_, k.data(), degree_) == 0) return idx;
  }
}

std::optional<std::size_t> ElementSet::find(const Permutation& p) const {
  if (p.degree() != degree_) return std::nullopt;
  auto enc = encode(p);
  return find(Key(enc));
}

void ElementSet::reserve(std::size_t n) {
  storage_.reserve(n * degree_);
  std::size_t want = 16;
  while (want < 2 * n) want <<= 1;
  if (want > slots_.size()) {
    slots_.assign(want, kEmpty);
    mask_ = want - 1;
    for (std::size_t i = 0; i < count_; ++i) {
      std::size_t slot = hash(key(i)) & mask_;
      while (slots_[slot] != kEmpty) slot = (slot + 1) & mask_;
      slots_[slot] = static_cast<std::uint32_t>(i);
    }
  }
}

void ElementSet::grow() { reserve(std::max<std::size_t>(count_ * 2, 8)); }

std::pair<std::size_t, bool> ElementSet::insert(Key k) {
  if (k.size() != degree_) throw InvalidInput("element degree mismatch");
  if (2 * (count_ + 1) > slots_.size()) grow();
  std::size_t slot = hash(k) & mask_;
  for (;; slot = (slot + 1) & mask_) {
    std::uint32_t idx = slots_[slot];
    if (idx == kEmpty) break;
    if (std::memcmp(storage_.data() + std::size_t{idx} * degree_, k.data(), degree_) == 0) return {idx, false};
  }
  if (count_ >= kEmpty) throw std::length_error("element set full");
  slots_[slot] = static_cast<std::uint32_t>(count_);
  storage_.insert(storage_.end(), k.begin(), k.end());
  return {count_++, true};
}

std::pair<std::size_t, bool> ElementSet::insert(const Permutation& p) {
  auto enc = encode(p);
  return insert(Key(enc));
}

}  // namespace kclass
