#include "qtk/perm_group.hpp"

#include <algorithm>
#include <unordered_set>

namespace qtk {

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<ChainCache>()) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw DegreeMismatch(g.degree(), degree_);
  }
}

const StabilizerChain& PermutationGroup::chain() const {
  std::call_once(cache_->once, [this] {
    cache_->chain = std::make_unique<StabilizerChain>(degree_, generators_);
  });
  return *cache_->chain;
}

std::vector<point_t> orbit(const PermutationGroup& group, point_t x) {
  if (x >= group.degree()) throw Error("orbit: point out of range");
  std::vector<bool> seen(group.degree(), false);
  std::vector<point_t> result{x};
  seen[x] = true;
  for (std::size_t k = 0; k < result.size(); ++k) {
    for (const auto& g : group.generators()) {
      point_t y = g(result[k]);
      if (!seen[y]) {
        seen[y] = true;
        result.push_back(y);
      }
    }
  }
  return result;
}

std::vector<std::vector<point_t>> orbits(std::size_t degree, std::span<const Permutation> generators) {
  std::vector<int> label(degree, -1);
  std::vector<std::vector<point_t>> result;
  for (point_t start = 0; start < degree; ++start) {
    if (label[start] >= 0) continue;
    int id = static_cast<int>(result.size());
    std::vector<point_t> current{start};
    label[start] = id;
    for (std::size_t k = 0; k < current.size(); ++k) {
      for (const auto& g : generators) {
        point_t y = g(current[k]);
        if (label[y] < 0) {
          label[y] = id;
          current.push_back(y);
        }
      }
    }
    std::sort(current.begin(), current.end());
    result.push_back(std::move(current));
  }
  return result;
}

bool is_transitive(const PermutationGroup& group) {
  if (group.degree() == 0) return true;
  return orbit(group, 0).size() == group.degree();
}

BigCount group_order(const PermutationGroup& group) { return group.chain().order(); }

bool contains(const PermutationGroup& group, const Permutation& p) {
  if (p.degree() != group.degree()) throw DegreeMismatch(p.degree(), group.degree());
  return group.chain().contains(p);
}

std::vector<Permutation> point_stabilizer_generators(const PermutationGroup& group, point_t x) {
  const std::size_t d = group.degree();
  std::vector<int> slot(d, -1);
  std::vector<point_t> orb{x};
  std::vector<Permutation> transversal{Permutation::identity(d)};
  slot[x] = 0;
  for (std::size_t k = 0; k < orb.size(); ++k) {
    for (const auto& g : group.generators()) {
      point_t y = g(orb[k]);
      if (slot[y] >= 0) continue;
      slot[y] = static_cast<int>(orb.size());
      orb.push_back(y);
      transversal.push_back(g * transversal[k]);
    }
  }
  const BigCount target = group_order(group) / orb.size();
  StabilizerChain stab(d);
  for (std::size_t k = 0; k < orb.size() && stab.order() < target; ++k) {
    for (const auto& g : group.generators()) {
      point_t y = g(orb[k]);
      Permutation h = transversal[static_cast<std::size_t>(slot[y])].inverse() * g * transversal[k];
      if (!h.is_identity()) stab.extend(h);
      if (stab.order() == target) break;
    }
  }
  return {stab.generators().begin(), stab.generators().end()};
}

std::vector<Permutation> enumerate_elements(const PermutationGroup& group, std::size_t cap) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> elements{Permutation::identity(group.degree())};
  seen.insert(elements.front());
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const auto& g : group.generators()) {
      Permutation next = elements[k] * g;
      if (seen.insert(next).second) {
        elements.push_back(std::move(next));
        if (elements.size() > cap) throw Error("enumerate_elements: element cap exceeded");
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

}  // namespace qtk
