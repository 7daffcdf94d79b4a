#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qtk/permutation.hpp"
#include "qtk/types.hpp"

namespace qtk {

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// Base points are always the smallest point moved by the element that forces
/// a new level. Transversals are stored explicitly, so memory grows as
/// (orbit length) x (degree) per level; intended for degrees up to a few
/// thousand.
class StabilizerChain {
 public:
  explicit StabilizerChain(std::size_t degree);
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators);

  std::size_t degree() const { return degree_; }
  BigCount order() const;
  bool contains(const Permutation& p) const;

  /// Adds g to the generating set if it is not already a member.
  /// Returns true when the group grew.
  bool extend(const Permutation& g);

  std::size_t depth() const { return levels_.size(); }
  std::vector<point_t> base() const;
  /// Strong generators fixing the first `level` base points.
  std::span<const Permutation> strong_generators(std::size_t level) const;
  std::span<const point_t> basic_orbit(std::size_t level) const;
  std::span<const Permutation> generators() const { return generators_; }

 private:
  struct Level {
    point_t base = 0;
    std::vector<Permutation> gens;
    std::vector<point_t> orbit;
    std::vector<int> slot;                // point -> position in orbit, or -1
    std::vector<Permutation> transversal; // transversal[k](base) == orbit[k]
  };

  struct SiftResult {
    Permutation residue;
    std::size_t level;
  };

  void rebuild();
  void recompute_orbit(Level& level) const;
  SiftResult sift(Permutation h, std::size_t start) const;
  void push_level(point_t base);

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

}  // namespace qtk
