#pragma once

#include <cstdint>
#include <vector>

#include "qtk/perm_group.hpp"

namespace qtk {

/// a + b i in GF(9) = Z_3[i], i^2 = -1. Index a + 3 b.
class GF9Element {
 public:
  constexpr GF9Element() = default;
  constexpr GF9Element(std::uint8_t a, std::uint8_t b) : a_(a % 3), b_(b % 3) {}
  static constexpr GF9Element from_index(std::size_t k) { return {std::uint8_t(k % 3), std::uint8_t(k / 3)}; }
  /// 1 + i, a generator of the multiplicative group.
  static constexpr GF9Element zeta() { return {1, 1}; }

  constexpr std::uint8_t real() const { return a_; }
  constexpr std::uint8_t imag() const { return b_; }
  constexpr std::size_t index() const { return a_ + 3u * b_; }
  constexpr bool is_zero() const { return a_ == 0 && b_ == 0; }

  friend constexpr GF9Element operator+(GF9Element x, GF9Element y) {
    return {std::uint8_t(x.a_ + y.a_), std::uint8_t(x.b_ + y.b_)};
  }
  friend constexpr GF9Element operator-(GF9Element x) {
    return {std::uint8_t(3 - x.a_), std::uint8_t(3 - x.b_)};
  }
  friend constexpr GF9Element operator-(GF9Element x, GF9Element y) { return x + (-y); }
  friend constexpr GF9Element operator*(GF9Element x, GF9Element y) {
    // (a + bi)(c + di) = (ac - bd) + (ad + bc) i
    return {std::uint8_t((x.a_ * y.a_ + 2 * x.b_ * y.b_) % 3), std::uint8_t((x.a_ * y.b_ + x.b_ * y.a_) % 3)};
  }
  friend constexpr bool operator==(GF9Element, GF9Element) = default;

  GF9Element pow(unsigned k) const;
  /// Throws on zero.
  GF9Element inverse() const;
  /// x -> x^3.
  GF9Element frobenius() const { return pow(3); }

 private:
  std::uint8_t a_ = 0, b_ = 0;
};

/// Points of the projective line over GF(9): GF9 indices 0..8, then infinity = 9.
inline constexpr point_t kInfinity = 9;

/// x -> (a x + b) / (c x + d) on the projective line; ad - bc must be nonzero.
Permutation mobius(GF9Element a, GF9Element b, GF9Element c, GF9Element d);
/// x -> x^3, fixing infinity.
Permutation frobenius_map();

/// PGL(2,9) = <x+1, zeta x, 1/x> on 10 points.
PermutationGroup pgl2_9();
/// PSL(2,9) = <x+1, zeta^2 x, -1/x>, order 360.
PermutationGroup psl2_9();
/// M10 = <PSL(2,9), x -> zeta^k x^3> for the first odd k giving order 720 and
/// an involution count different from S6 and PGL(2,9).
PermutationGroup m10();

/// Number of elements of order exactly 2.
std::size_t involution_count(const PermutationGroup& g);

}  // namespace qtk
