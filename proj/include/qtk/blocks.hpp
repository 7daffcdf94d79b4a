#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qtk/perm_group.hpp"

namespace qtk {

/// A partition of {0, ..., d-1}. Blocks are sorted internally and ordered by
/// their smallest point.
class BlockPartition {
 public:
  BlockPartition() = default;
  explicit BlockPartition(std::vector<std::vector<point_t>> blocks);

  std::size_t degree() const { return block_of_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<point_t>>& blocks() const { return blocks_; }
  std::size_t block_of(point_t x) const { return block_of_[x]; }
  /// Common block size, or 0 if the blocks differ in size.
  std::size_t block_size() const;
  bool is_trivial() const { return blocks_.size() == 1 || blocks_.size() == degree(); }

  /// Every generator maps every block onto a block.
  bool is_invariant(std::span<const Permutation> generators) const;

  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;

 private:
  std::vector<std::vector<point_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

/// Finest generator-invariant partition in which every point of `seed` lies
/// in one class. Works for any generator list; no transitivity required.
BlockPartition invariant_closure(std::size_t degree, std::span<const Permutation> generators,
                                 std::span<const point_t> seed);

/// Finest G-invariant partition with a and b in the same class.
BlockPartition minimal_block(const PermutationGroup& group, point_t a, point_t b);

struct PrimitivityVerdict {
  bool primitive = false;
  /// Proper invariant partition when not primitive; for an intransitive
  /// group this is the orbit partition.
  std::optional<BlockPartition> witness;
};

/// Decides primitivity. The stabilizer of point 0 is taken from the chain for
/// moderate degrees; above that every point is tried as a seed.
PrimitivityVerdict is_primitive(const PermutationGroup& group);

/// Same, with generators of a subgroup of the stabilizer of `base` supplied
/// by the caller. Seeds are one point per orbit of that subgroup, smallest
/// orbits first; any subgroup gives a correct verdict, a larger one fewer seeds.
PrimitivityVerdict is_primitive(const PermutationGroup& group,
                                std::span<const Permutation> stabilizer_generators, point_t base = 0);

}  // namespace qtk
