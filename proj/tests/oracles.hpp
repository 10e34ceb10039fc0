#pragma once

// Slow reference implementations used only by the tests. None of them call
// into the library, so agreement is evidence rather than tautology.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

/// x -> q(p(x)), the same left-to-right convention as the library.
inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = q[p[x]];
  return r;
}

inline Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<int>(x);
  return r;
}

/// a g a^-1 applied left to right.
inline Perm conjugate(const Perm& g, const Perm& a) { return compose(compose(a, g), inverse(a)); }

/// Closure by repeated multiplication until nothing new appears.
inline std::set<Perm> closure(const std::vector<Perm>& gens) {
  std::set<Perm> elements;
  Perm id(gens.front().size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  elements.insert(id);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> current(elements.begin(), elements.end());
    for (const auto& x : current) {
      for (const auto& g : gens) {
        if (elements.insert(compose(x, g)).second) grew = true;
      }
    }
  }
  return elements;
}

/// Orbits of `by` (every element, not just generators) acting on `set` by conjugation.
inline std::vector<std::size_t> conjugation_orbit_sizes(const std::set<Perm>& set, const std::set<Perm>& by) {
  std::set<Perm> seen;
  std::vector<std::size_t> sizes;
  for (const auto& x : set) {
    if (seen.count(x)) continue;
    std::set<Perm> orbit;
    for (const auto& a : by) orbit.insert(conjugate(x, a));
    seen.insert(orbit.begin(), orbit.end());
    sizes.push_back(orbit.size());
  }
  return sizes;
}

inline std::uint64_t element_order(const Perm& p) {
  std::uint64_t order = 1;
  Perm x = p;
  Perm id(p.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  while (x != id) {
    x = compose(x, p);
    ++order;
  }
  return order;
}

/// Partitions of n with parts <= max_part, by plain recursion.
inline std::uint64_t partitions(int n, int max_part) {
  if (n == 0) return 1;
  std::uint64_t total = 0;
  for (int part = std::min(n, max_part); part >= 1; --part) total += partitions(n - part, part);
  return total;
}

inline std::uint64_t partitions(int n) { return partitions(n, n); }

/// Partitions into distinct odd parts, each part < bound.
inline std::uint64_t distinct_odd(int n, int bound) {
  if (n == 0) return 1;
  std::uint64_t total = 0;
  for (int part = 1; part < bound && part <= n; part += 2) total += distinct_odd(n - part, part);
  return total;
}

inline std::uint64_t distinct_odd(int n) { return distinct_odd(n, n + 2); }

/// Pascal's triangle row by row.
inline std::uint64_t binomial(int n, int k) {
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(i + 1, 1);
    for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

inline long double gamma(long double log2_aut, long double k) {
  const long double lk = std::log2(k);
  return log2_aut / (lk * lk * std::log2(lk));
}

}  // namespace oracle
