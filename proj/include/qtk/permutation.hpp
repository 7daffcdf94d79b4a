#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qtk/types.hpp"

namespace qtk {

/// A bijection of {0, ..., d-1} stored as its image array.
///
/// Products follow function composition: (p * q)(x) = p(q(x)), i.e. the right
/// factor is applied first. Bijectivity is checked on construction.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<point_t> images);

  static Permutation identity(std::size_t degree);
  /// Builds a permutation from 0-based cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<point_t>>& cycles);
  /// Parses 1-based cycle notation such as "(1,2)(3,4)"; "()" is the identity.
  static Permutation parse_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  point_t operator()(point_t x) const { return images_[x]; }
  point_t operator[](point_t x) const { return images_[x]; }
  std::span<const point_t> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Smallest point moved by this permutation, or degree() if none.
  point_t first_moved_point() const;
  std::size_t order() const;
  bool is_even() const;
  std::vector<point_t> fixed_points() const;
  /// Cycle lengths in decreasing order, fixed points included as 1-cycles.
  std::vector<std::size_t> cycle_lengths() const;
  /// 0-based cycles of length >= 2, each starting at its smallest point.
  std::vector<std::vector<point_t>> cycles() const;

  /// 1-based cycle notation, "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct unchecked_tag {};
  Permutation(std::vector<point_t> images, unchecked_tag) : images_(std::move(images)) {}

  std::vector<point_t> images_;

  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation conjugate(const Permutation& g, const Permutation& x);
  friend Permutation power(const Permutation& p, long long k);
};

/// p o q: x -> p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// g x g^-1.
Permutation conjugate(const Permutation& g, const Permutation& x);

/// p^k for any integer k.
Permutation power(const Permutation& p, long long k);

/// Writes g x g^-1 into out without allocation; spans must all have equal length.
void conjugate_into(std::span<const point_t> g, std::span<const point_t> x,
                    std::span<point_t> out);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

std::size_t hash_points(std::span<const point_t> points) noexcept;

}  // namespace qtk
