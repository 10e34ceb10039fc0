#include "kclass/permutation.hpp"

#include <numeric>
#include <sstream>

#include "kclass/errors.hpp"

namespace kclass {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size()) {
      throw InvalidInput("not a bijection: image " + std::to_string(v) + " out of range for degree " +
                         std::to_string(images_.size()));
    }
    if (seen[v]) throw InvalidInput("not a bijection: image " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    std::vector<Point> c(cycle);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree) throw InvalidInput("cycle point out of range");
      if (used[c[i]]) throw InvalidInput("cycles are not disjoint");
      used[c[i]] = true;
      images[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) inv[images_[x]] = static_cast<Point>(x);
  return Permutation(std::move(inv), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw InvalidInput("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                       std::to_string(q.degree()));
  }
  std::vector<Point> out(p.degree());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = q.images_[p.images_[x]];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation& g, const Permutation& a) {
  return compose(compose(a, g), a.inverse());
}

Permutation power(const Permutation& p, std::uint64_t e) {
  Permutation result = Permutation::identity(p.degree());
  Permutation base = p;
  while (e) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t element_order(const Permutation& p) {
  std::uint64_t order = 1;
  for (const auto& c : p.cycles()) {
    std::uint64_t len = c.size();
    std::uint64_t g = std::gcd(order, len);
    if (order / g > UINT64_MAX / len) throw std::overflow_error("element order exceeds 64 bits");
    order = order / g * len;
  }
  return order;
}

}  // namespace kclass
