#include "kclass/classes.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

#include "kclass/errors.hpp"

namespace kclass {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

OrbitPartition conjugation_orbits(const ElementSet& set, std::span<const Permutation> conjugators) {
  const std::size_t n = set.degree();
  const std::size_t count = set.size();
  UnionFind uf(count);

  std::vector<std::uint8_t> buffer(n);
  for (const auto& a : conjugators) {
    if (a.degree() != n) throw InvalidInput("conjugator degree mismatch");
    if (a.is_identity()) continue;
    auto fwd = ElementSet::encode(a);
    auto inv = ElementSet::encode(a.inverse());
    for (std::size_t i = 0; i < count; ++i) {
      auto g = set.key(i);
      // a g a^-1: apply a, then g, then a^-1
      for (std::size_t x = 0; x < n; ++x) buffer[x] = inv[g[fwd[x]]];
      auto j = set.find(ElementSet::Key(buffer));
      if (!j) throw InvalidInput("set is not closed under conjugation by " + a.to_string());
      uf.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(*j));
    }
  }

  // Root -> smallest member, then number orbits by smallest member.
  std::vector<std::uint32_t> best(count, UINT32_MAX);
  for (std::uint32_t i = 0; i < count; ++i) {
    std::uint32_t r = uf.find(i);
    if (best[r] == UINT32_MAX || std::memcmp(set.key(i).data(), set.key(best[r]).data(), n) < 0) best[r] = i;
  }
  std::vector<std::uint32_t> roots;
  for (std::uint32_t i = 0; i < count; ++i) {
    if (uf.find(i) == i) roots.push_back(i);
  }
  std::sort(roots.begin(), roots.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::memcmp(set.key(best[a]).data(), set.key(best[b]).data(), n) < 0;
  });
  std::vector<std::uint32_t> label(count, 0);
  OrbitPartition out;
  for (std::uint32_t r : roots) {
    label[r] = static_cast<std::uint32_t>(out.representative.size());
    out.representative.push_back(best[r]);
  }
  out.size.assign(roots.size(), 0);
  out.orbit_of.resize(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    std::uint32_t l = label[uf.find(i)];
    out.orbit_of[i] = l;
    ++out.size[l];
  }
  return out;
}

std::uint64_t ClassDecomposition::total() const noexcept {
  return std::accumulate(sizes.begin(), sizes.end(), std::uint64_t{0});
}

ClassDecomposition conjugacy_classes(const FiniteGroup& group, const ElementSet& elements) {
  if (auto cached = group.cached_classes()) return *cached;
  auto orbits = conjugation_orbits(elements, group.generators());
  ClassDecomposition out;
  for (std::size_t c = 0; c < orbits.count(); ++c) {
    out.representatives.push_back(elements.at(orbits.representative[c]));
    out.sizes.push_back(orbits.size[c]);
  }
  group.store_classes(std::make_shared<const ClassDecomposition>(out));
  return out;
}

ClassDecomposition conjugacy_classes(const FiniteGroup& group, std::size_t cap) {
  if (auto cached = group.cached_classes()) {
    if (cached->total() > cap) throw CapExceeded(cap);
    return *cached;
  }
  return conjugacy_classes(group, group_elements(group, cap));
}

}  // namespace kclass
