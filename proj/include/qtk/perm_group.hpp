#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "qtk/permutation.hpp"
#include "qtk/stabilizer_chain.hpp"

namespace qtk {

/// A permutation group given by generators, with a lazily built stabilizer
/// chain. Copies share the memoized chain; initialization is guarded so a
/// group may be queried from several threads.
class PermutationGroup {
 public:
  /// An empty generator list denotes the trivial group of the given degree.
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const { return degree_; }
  std::span<const Permutation> generators() const { return generators_; }

  const StabilizerChain& chain() const;

 private:
  struct ChainCache {
    std::once_flag once;
    std::unique_ptr<StabilizerChain> chain;
  };

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<ChainCache> cache_;
};

/// Orbit of x, in breadth-first discovery order.
std::vector<point_t> orbit(const PermutationGroup& group, point_t x);
/// Orbits of an arbitrary generator list (possibly a subgroup's), each sorted,
/// ordered by smallest point.
std::vector<std::vector<point_t>> orbits(std::size_t degree, std::span<const Permutation> generators);
bool is_transitive(const PermutationGroup& group);

BigCount group_order(const PermutationGroup& group);
bool contains(const PermutationGroup& group, const Permutation& p);

/// Generators of the stabilizer of x, from Schreier generators added until the
/// orbit-stabilizer order is reached.
std::vector<Permutation> point_stabilizer_generators(const PermutationGroup& group, point_t x);

/// All elements, by breadth-first closure under right multiplication by
/// generators; the result is sorted. Throws when more than `cap` elements appear.
std::vector<Permutation> enumerate_elements(const PermutationGroup& group, std::size_t cap = 1'000'000);

}  // namespace qtk
