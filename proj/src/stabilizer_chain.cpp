#include "qtk/stabilizer_chain.hpp"

namespace qtk {

StabilizerChain::StabilizerChain(std::size_t degree) : degree_(degree) {}

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators)
    : degree_(degree) {
  for (const auto& g : generators) {
    if (g.degree() != degree_) throw DegreeMismatch(g.degree(), degree_);
    if (!g.is_identity()) generators_.push_back(g);
  }
  rebuild();
}

BigCount StabilizerChain::order() const {
  BigCount result = 1;
  for (const auto& level : levels_) result *= level.orbit.size();
  return result;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw DegreeMismatch(p.degree(), degree_);
  return sift(p, 0).residue.is_identity();
}

bool StabilizerChain::extend(const Permutation& g) {
  if (contains(g)) return false;
  generators_.push_back(g);
  rebuild();
  return true;
}

std::vector<point_t> StabilizerChain::base() const {
  std::vector<point_t> b;
  for (const auto& level : levels_) b.push_back(level.base);
  return b;
}

std::span<const Permutation> StabilizerChain::strong_generators(std::size_t level) const {
  if (level >= levels_.size()) return {};
  return levels_[level].gens;
}

std::span<const point_t> StabilizerChain::basic_orbit(std::size_t level) const {
  return levels_.at(level).orbit;
}

void StabilizerChain::push_level(point_t base) {
  Level level;
  level.base = base;
  levels_.push_back(std::move(level));
}

void StabilizerChain::recompute_orbit(Level& level) const {
  level.orbit.assign(1, level.base);
  level.slot.assign(degree_, -1);
  level.transversal.assign(1, Permutation::identity(degree_));
  level.slot[level.base] = 0;
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    point_t x = level.orbit[k];
    for (const auto& s : level.gens) {
      point_t y = s(x);
      if (level.slot[y] >= 0) continue;
      level.slot[y] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(y);
      level.transversal.push_back(s * level.transversal[k]);
    }
  }
}

StabilizerChain::SiftResult StabilizerChain::sift(Permutation h, std::size_t start) const {
  for (std::size_t i = start; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    int k = level.slot[h(level.base)];
    if (k < 0) return {std::move(h), i};
    h = level.transversal[static_cast<std::size_t>(k)].inverse() * h;
  }
  return {std::move(h), levels_.size()};
}

void StabilizerChain::rebuild() {
  levels_.clear();
  // initial base: every generator must move some base point
  for (const auto& g : generators_) {
    bool moves_base = false;
    for (const auto& level : levels_) {
      if (g(level.base) != level.base) {
        moves_base = true;
        break;
      }
    }
    if (!moves_base) push_level(g.first_moved_point());
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& g : generators_) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i && fixes_prefix; ++j) fixes_prefix = g(levels_[j].base) == levels_[j].base;
      if (fixes_prefix) levels_[i].gens.push_back(g);
    }
    recompute_orbit(levels_[i]);
  }

  // Schreier generators are checked top-down; a failed sift inserts the
  // residue at every level it belongs to and resumes from the deepest one.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool stable = true;
    Level* level = &levels_[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < level->orbit.size() && stable; ++k) {
      for (std::size_t s = 0; s < level->gens.size(); ++s) {
        const Permutation& gen = level->gens[s];
        point_t y = gen(level->orbit[k]);
        const Permutation& uy = level->transversal[static_cast<std::size_t>(level->slot[y])];
        Permutation schreier = uy.inverse() * gen * level->transversal[k];
        SiftResult r = sift(std::move(schreier), static_cast<std::size_t>(i) + 1);
        if (r.residue.is_identity()) continue;
        std::size_t j = r.level;
        if (j == levels_.size()) push_level(r.residue.first_moved_point());
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels_[l].gens.push_back(r.residue);
          recompute_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        stable = false;
        break;
      }
    }
    if (stable) --i;
  }
}

}  // namespace qtk
