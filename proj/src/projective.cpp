#include "qtk/projective.hpp"

#include "qtk/classical_groups.hpp"

namespace qtk {

GF9Element GF9Element::pow(unsigned k) const {
  GF9Element result{1, 0}, base = *this;
  for (; k > 0; k >>= 1) {
    if (k & 1) result = result * base;
    base = base * base;
  }
  return result;
}

GF9Element GF9Element::inverse() const {
  if (is_zero()) throw Error("GF9Element: zero has no inverse");
  return pow(7);
}

Permutation mobius(GF9Element a, GF9Element b, GF9Element c, GF9Element d) {
  if ((a * d - b * c).is_zero()) throw Error("mobius: singular matrix");
  std::vector<point_t> images(10);
  for (std::size_t k = 0; k < 9; ++k) {
    const auto x = GF9Element::from_index(k);
    const auto num = a * x + b, den = c * x + d;
    images[k] = den.is_zero() ? kInfinity : static_cast<point_t>((num * den.inverse()).index());
  }
  // infinity -> a / c
  images[kInfinity] = c.is_zero() ? kInfinity : static_cast<point_t>((a * c.inverse()).index());
  return Permutation(std::move(images));
}

Permutation frobenius_map() {
  std::vector<point_t> images(10);
  for (std::size_t k = 0; k < 9; ++k) images[k] = static_cast<point_t>(GF9Element::from_index(k).frobenius().index());
  images[kInfinity] = kInfinity;
  return Permutation(std::move(images));
}

namespace {

constexpr GF9Element kZero{0, 0}, kOne{1, 0};

std::vector<Permutation> psl_generators() {
  const auto z = GF9Element::zeta();
  return {mobius(kOne, kOne, kZero, kOne), mobius(z * z, kZero, kZero, kOne), mobius(kZero, -kOne, kOne, kZero)};
}

}  // namespace

PermutationGroup pgl2_9() {
  PermutationGroup g(10, {mobius(kOne, kOne, kZero, kOne), mobius(GF9Element::zeta(), kZero, kZero, kOne),
                          mobius(kZero, kOne, kOne, kZero)});
  if (group_order(g) != 720) throw Error("pgl2_9: generators do not give order 720");
  return g;
}

PermutationGroup psl2_9() {
  PermutationGroup g(10, psl_generators());
  if (group_order(g) != 360) throw Error("psl2_9: generators do not give order 360");
  return g;
}

std::size_t involution_count(const PermutationGroup& g) {
  std::size_t count = 0;
  for (const auto& x : enumerate_elements(g)) count += x.order() == 2;
  return count;
}

PermutationGroup m10() {
  const std::size_t s6 = involution_count(symmetric_group(6));
  const std::size_t pgl = involution_count(pgl2_9());
  const auto z = GF9Element::zeta();
  for (unsigned k = 1; k < 8; k += 2) {
    auto gens = psl_generators();
    gens.push_back(mobius(z.pow(k), kZero, kZero, kOne) * frobenius_map());
    PermutationGroup g(10, std::move(gens));
    if (group_order(g) != 720) continue;
    const std::size_t inv = involution_count(g);
    if (inv != s6 && inv != pgl) return g;
  }
  throw Error("m10: no candidate generator set passed verification");
}

}  // namespace qtk
