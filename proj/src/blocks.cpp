#include "qtk/blocks.hpp"

#include "qtk/detail/union_find.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <utility>

namespace qtk {

using detail::UnionFind;

namespace {

BlockPartition partition_from(UnionFind& uf) { return BlockPartition(uf.classes()); }

}  // namespace

BlockPartition::BlockPartition(std::vector<std::vector<point_t>> blocks) : blocks_(std::move(blocks)) {
  std::size_t degree = 0;
  for (auto& b : blocks_) {
    std::sort(b.begin(), b.end());
    degree += b.size();
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  block_of_.assign(degree, degree);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].empty()) throw Error("BlockPartition: empty block");
    for (point_t x : blocks_[i]) {
      if (x >= degree || block_of_[x] != degree) throw Error("BlockPartition: blocks do not partition the points");
      block_of_[x] = i;
    }
  }
}

std::size_t BlockPartition::block_size() const {
  if (blocks_.empty()) return 0;
  std::size_t size = blocks_.front().size();
  for (const auto& b : blocks_) {
    if (b.size() != size) return 0;
  }
  return size;
}

bool BlockPartition::is_invariant(std::span<const Permutation> generators) const {
  for (const auto& g : generators) {
    if (g.degree() != degree()) throw DegreeMismatch(g.degree(), degree());
    for (const auto& b : blocks_) {
      std::size_t target = block_of_[g(b.front())];
      if (blocks_[target].size() != b.size()) return false;
      for (point_t x : b) {
        if (block_of_[g(x)] != target) return false;
      }
    }
  }
  return true;
}

BlockPartition invariant_closure(std::size_t degree, std::span<const Permutation> generators,
                                 std::span<const point_t> seed) {
  UnionFind uf(degree);
  std::deque<std::pair<point_t, point_t>> pending;
  for (std::size_t i = 1; i < seed.size(); ++i) {
    if (uf.unite(seed[0], seed[i])) pending.emplace_back(seed[0], seed[i]);
  }
  // each merged pair is one edge of a spanning forest; images of all edges
  // under every generator must end up merged as well
  while (!pending.empty()) {
    auto [x, y] = pending.front();
    pending.pop_front();
    for (const auto& g : generators) {
      point_t gx = g(x);
      point_t gy = g(y);
      if (uf.unite(gx, gy)) pending.emplace_back(gx, gy);
    }
  }
  return partition_from(uf);
}

BlockPartition minimal_block(const PermutationGroup& group, point_t a, point_t b) {
  if (a == b) throw Error("minimal_block: seed points must differ");
  if (a >= group.degree() || b >= group.degree()) throw Error("minimal_block: point out of range");
  if (!is_transitive(group)) throw Error("minimal_block: group is not transitive");
  const point_t seed[] = {a, b};
  return invariant_closure(group.degree(), group.generators(), seed);
}

namespace {

constexpr std::size_t kChainDegreeLimit = 2048;

std::optional<PrimitivityVerdict> trivial_verdict(const PermutationGroup& group) {
  if (group.degree() < 2) return PrimitivityVerdict{false, std::nullopt};
  auto orbs = orbits(group.degree(), group.generators());
  if (orbs.size() > 1) return PrimitivityVerdict{false, BlockPartition(std::move(orbs))};
  return std::nullopt;
}

}  // namespace

PrimitivityVerdict is_primitive(const PermutationGroup& group) {
  if (auto v = trivial_verdict(group)) return *v;
  if (group.degree() <= kChainDegreeLimit) {
    auto stab = point_stabilizer_generators(group, 0);
    return is_primitive(group, stab);
  }
  return is_primitive(group, std::span<const Permutation>{});
}

PrimitivityVerdict is_primitive(const PermutationGroup& group,
                                std::span<const Permutation> stabilizer_generators, point_t base) {
  if (auto v = trivial_verdict(group)) return *v;
  if (base >= group.degree()) throw Error("is_primitive: base point out of range");
  for (const auto& h : stabilizer_generators) {
    if (h.degree() != group.degree()) throw DegreeMismatch(h.degree(), group.degree());
    if (h(base) != base) throw Error("is_primitive: stabilizer generator moves the base point");
  }
  // the minimal block through {base, b} depends only on the stabilizer orbit of b
  auto suborbits = orbits(group.degree(), stabilizer_generators);
  std::vector<std::pair<std::size_t, point_t>> seeds;
  for (const auto& orb : suborbits) {
    if (std::binary_search(orb.begin(), orb.end(), base)) continue;
    seeds.emplace_back(orb.size(), orb.front());
  }
  std::sort(seeds.begin(), seeds.end());
  for (const auto& [size, b] : seeds) {
    const point_t seed[] = {base, b};
    BlockPartition blocks = invariant_closure(group.degree(), group.generators(), seed);
    if (blocks.block_count() > 1) return PrimitivityVerdict{false, std::move(blocks)};
  }
  return PrimitivityVerdict{true, std::nullopt};
}

}  // namespace qtk
