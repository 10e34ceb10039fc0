#include "kclass/group.hpp"

#include <mutex>
#include <optional>

#include "kclass/errors.hpp"
#include "kclass/stabilizer_chain.hpp"

namespace kclass {

struct FiniteGroup::Cache {
  std::mutex mutex;
  std::unique_ptr<StabilizerChain> chain;
  std::shared_ptr<const ClassDecomposition> classes;
};

FiniteGroup::FiniteGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) {
      throw InvalidInput("generator of degree " + std::to_string(g.degree()) + " in a group of degree " +
                         std::to_string(degree_));
    }
  }
}

const StabilizerChain& FiniteGroup::chain() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->chain) cache_->chain = std::make_unique<StabilizerChain>(degree_, generators_);
  return *cache_->chain;
}

mpz_class FiniteGroup::order() const { return chain().order(); }

bool FiniteGroup::contains(const Permutation& p) const { return chain().contains(p); }

std::shared_ptr<const ClassDecomposition> FiniteGroup::cached_classes() const {
  std::lock_guard lock(cache_->mutex);
  return cache_->classes;
}

void FiniteGroup::store_classes(std::shared_ptr<const ClassDecomposition> classes) const {
  std::lock_guard lock(cache_->mutex);
  cache_->classes = std::move(classes);
}

FiniteGroup symmetric_group(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<Point> cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>((i + 1) % n);
    gens.emplace_back(std::move(cycle));
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  }
  return FiniteGroup(n, std::move(gens));
}

FiniteGroup alternating_group(std::size_t n) {
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i) {
    // 3-cycles (0 1 i) generate A_n
    std::vector<Point> img(n);
    for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<Point>(x);
    img[0] = 1;
    img[1] = static_cast<Point>(i);
    img[i] = 0;
    gens.emplace_back(std::move(img));
  }
  return FiniteGroup(n, std::move(gens));
}

FiniteGroup cyclic_group(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<Point> cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>((i + 1) % n);
    gens.emplace_back(std::move(cycle));
  }
  return FiniteGroup(n, std::move(gens));
}

ElementSet group_elements(const FiniteGroup& group, std::size_t cap) {
  if (cap == 0) throw InvalidInput("cap must be at least 1");
  const std::size_t n = group.degree();
  ElementSet set(n);
  if (group.order() > cap) throw CapExceeded(cap);

  std::vector<std::vector<std::uint8_t>> gens;
  for (const auto& g : group.generators()) {
    if (!g.is_identity()) gens.push_back(ElementSet::encode(g));
  }
  set.reserve(static_cast<std::size_t>(group.order().get_ui()));

  set.insert(Permutation::identity(n));
  std::vector<std::uint8_t> buffer(n);
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (const auto& g : gens) {
      auto cur = set.key(i);
      for (std::size_t x = 0; x < n; ++x) buffer[x] = g[cur[x]];
      auto [index, inserted] = set.insert(ElementSet::Key(buffer));
      (void)index;
      if (inserted && set.size() > cap) throw CapExceeded(cap);
    }
  }
  return set;
}

std::uint64_t group_order(const FiniteGroup& group, std::size_t cap) {
  if (cap == 0) throw InvalidInput("cap must be at least 1");
  mpz_class order = group.order();
  if (order > cap) throw CapExceeded(cap);
  return order.get_ui();
}

bool is_normal_subgroup(const FiniteGroup& ambient, std::span<const Permutation> subgroup_generators) {
  for (const auto& t : subgroup_generators) {
    if (t.degree() != ambient.degree()) throw InvalidInput("subgroup generator degree mismatch");
    if (!ambient.contains(t)) throw InvalidInput("subgroup generator " + t.to_string() + " is not in the ambient group");
  }
  FiniteGroup sub(ambient.degree(), std::vector<Permutation>(subgroup_generators.begin(), subgroup_generators.end()));
  for (const auto& a : ambient.generators()) {
    for (const auto& t : subgroup_generators) {
      if (!sub.contains(conjugate(t, a))) return false;
    }
  }
  return true;
}

}  // namespace kclass
