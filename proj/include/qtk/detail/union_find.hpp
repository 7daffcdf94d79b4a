#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "qtk/types.hpp"

namespace qtk::detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), point_t{0});
  }

  point_t find(point_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(point_t a, point_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  std::size_t class_size(point_t x) { return size_[find(x)]; }

  /// Classes as lists of points, in order of smallest member.
  std::vector<std::vector<point_t>> classes() {
    std::vector<int> index(parent_.size(), -1);
    std::vector<std::vector<point_t>> out;
    for (point_t x = 0; x < parent_.size(); ++x) {
      point_t r = find(x);
      if (index[r] < 0) {
        index[r] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[static_cast<std::size_t>(index[r])].push_back(x);
    }
    return out;
  }

 private:
  std::vector<point_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace qtk::detail
