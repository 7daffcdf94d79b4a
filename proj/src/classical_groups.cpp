#include "qtk/classical_groups.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace qtk {

PermutationGroup symmetric_group(std::size_t n) {
  if (n == 0) throw Error("symmetric_group: n must be positive");
  if (n == 1) return PermutationGroup(1, {});
  std::vector<point_t> full(n);
  std::iota(full.begin(), full.end(), point_t{0});
  return PermutationGroup(n, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {full})});
}

PermutationGroup alternating_group(std::size_t n) {
  if (n < 3) throw Error("alternating_group: n must be at least 3");
  std::vector<point_t> c;
  for (point_t i = (n % 2 == 1 ? 0 : 1); i < n; ++i) c.push_back(i);
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1, 2}})};
  if (n > 3) gens.push_back(Permutation::from_cycles(n, {c}));
  return PermutationGroup(n, std::move(gens));
}

Permutation cycle_type_representative(std::size_t n, std::vector<std::size_t> lengths) {
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  std::size_t total = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
  if (total > n || std::find(lengths.begin(), lengths.end(), 0) != lengths.end()) {
    throw Error("cycle_type_representative: cycle lengths do not fit the degree");
  }
  std::vector<std::vector<point_t>> cycles;
  point_t next = 0;
  for (std::size_t len : lengths) {
    std::vector<point_t> cycle;
    for (std::size_t k = 0; k < len; ++k) cycle.push_back(next++);
    if (len > 1) cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(n, cycles);
}

std::vector<std::vector<std::size_t>> integer_partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

BigCount symmetric_class_size(const std::vector<std::size_t>& lengths) {
  std::size_t n = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
  BigCount size = 1;
  for (std::size_t i = 2; i <= n; ++i) size *= i;
  std::map<std::size_t, std::size_t> multiplicity;
  for (std::size_t len : lengths) ++multiplicity[len];
  for (const auto& [len, m] : multiplicity) {
    for (std::size_t k = 0; k < m; ++k) size /= len;
    for (std::size_t k = 2; k <= m; ++k) size /= k;
  }
  return size;
}

}  // namespace qtk
