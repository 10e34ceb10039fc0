#include "kclass/stabilizer_chain.hpp"

#include "kclass/errors.hpp"

namespace kclass {

namespace {

Point first_moved_point(const Permutation& p) {
  for (std::size_t x = 0; x < p.degree(); ++x) {
    if (p(static_cast<Point>(x)) != x) return static_cast<Point>(x);
  }
  throw std::logic_error("identity has no moved point");
}

}  // namespace

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators)
    : degree_(degree) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InvalidInput("generator degree mismatch");
  }
  build(generators);
}

void StabilizerChain::rebuild_orbit(Level& level) const {
  level.orbit.assign(1, level.base_point);
  level.transversal.assign(degree_, std::nullopt);
  level.transversal[level.base_point] = Permutation::identity(degree_);
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    Point x = level.orbit[i];
    for (const auto& s : level.generators) {
      Point y = s(x);
      if (!level.transversal[y]) {
        level.transversal[y] = compose(*level.transversal[x], s);
        level.orbit.push_back(y);
      }
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    Point image = g(level.base_point);
    if (!level.transversal[image]) return {std::move(g), i};
    g = compose(g, level.transversal[image]->inverse());
  }
  return {std::move(g), levels_.size()};
}

void StabilizerChain::build(std::span<const Permutation> generators) {
  // Level i holds every strong generator fixing the first i base points.
  auto add_generator = [&](const Permutation& g, std::size_t upto) {
    while (levels_.size() <= upto) {
      Level level;
      level.base_point = first_moved_point(g);
      levels_.push_back(std::move(level));
    }
    for (std::size_t i = 0; i <= upto; ++i) {
      levels_[i].generators.push_back(g);
      rebuild_orbit(levels_[i]);
    }
  };

  for (const auto& g : generators) {
    if (g.is_identity()) continue;
    auto [residue, level] = strip(g, 0);
    if (residue.is_identity()) continue;
    // residue fixes base points 0..level-1; if it fixes all existing ones a new level is needed
    std::size_t upto = level;
    if (level == levels_.size()) upto = levels_.size();
    add_generator(residue, upto);
  }

  // Holt's SCHREIERSIMS: test every Schreier generator level by level,
  // restarting from the deepest level that received a new generator.
  std::size_t i = levels_.size();
  while (i > 0) {
    std::size_t cur = i - 1;
    bool restarted = false;
    for (std::size_t oi = 0; !restarted && oi < levels_[cur].orbit.size(); ++oi) {
      Point beta = levels_[cur].orbit[oi];
      for (std::size_t si = 0; si < levels_[cur].generators.size(); ++si) {
        const Level& lv = levels_[cur];
        const Permutation& s = lv.generators[si];
        Permutation h = compose(compose(*lv.transversal[beta], s), lv.transversal[s(beta)]->inverse());
        auto [residue, stop] = strip(std::move(h), cur + 1);
        if (residue.is_identity()) continue;
        // residue fixes base points up to stop-1; add it to levels cur+1..stop
        if (stop == levels_.size()) {
          Level fresh;
          fresh.base_point = first_moved_point(residue);
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t j = cur + 1; j <= stop; ++j) {
          levels_[j].generators.push_back(residue);
          rebuild_orbit(levels_[j]);
        }
        i = stop + 1;
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

mpz_class StabilizerChain::order() const {
  mpz_class n = 1;
  for (const auto& level : levels_) n *= static_cast<unsigned long>(level.orbit.size());
  return n;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, level] = strip(p, 0);
  (void)level;
  return residue.is_identity();
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (const auto& level : levels_) out.push_back(level.base_point);
  return out;
}

std::vector<std::size_t> StabilizerChain::orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& level : levels_) out.push_back(level.orbit.size());
  return out;
}

}  // namespace kclass
