#include "doctest.h"
#include "oracles.hpp"

#include "qtk/permutation.hpp"

using qtk::Permutation;

namespace {
Permutation cyc(std::size_t n, std::vector<std::vector<qtk::point_t>> c) { return Permutation::from_cycles(n, c); }
}  // namespace

TEST_CASE("compose follows right-factor-first convention") {
  const auto t = cyc(3, {{0, 1}});
  CHECK((t * t).is_identity());
  const auto p = cyc(5, {{0, 3, 1}, {2, 4}});
  CHECK(p * Permutation::identity(5) == p);
  const auto c = cyc(3, {{0, 1, 2}});
  CHECK(c * c == cyc(3, {{0, 2, 1}}));

  // (p*q)(x) == p(q(x))
  const auto a = cyc(3, {{0, 1}});
  const auto b = cyc(3, {{1, 2}});
  const auto ab = a * b;
  for (qtk::point_t x = 0; x < 3; ++x) CHECK(ab(x) == a(b(x)));
}

TEST_CASE("compose rejects degree mismatch") {
  CHECK_THROWS_AS(Permutation::identity(3) * Permutation::identity(4), qtk::DegreeMismatch);
  CHECK_THROWS_AS(qtk::conjugate(Permutation::identity(3), Permutation::identity(2)), qtk::DegreeMismatch);
}

TEST_CASE("conjugate") {
  const auto x = cyc(3, {{0, 1}});
  CHECK(qtk::conjugate(Permutation::identity(3), x) == x);
  const auto g = cyc(3, {{0, 1, 2}});
  CHECK(qtk::conjugate(g, g) == g);
  CHECK(qtk::conjugate(g, x) == cyc(3, {{1, 2}}));
}

TEST_CASE("constructor rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), qtk::Error);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), qtk::Error);
  CHECK_NOTHROW(Permutation({2, 0, 1}));
  CHECK_THROWS_AS(cyc(4, {{0, 1}, {1, 2}}), qtk::Error);
}

TEST_CASE("cycle strings are 1-based") {
  CHECK(Permutation::identity(4).to_cycle_string() == "()");
  const auto p = cyc(6, {{0, 1}, {2, 3}, {4, 5}});
  CHECK(p.to_cycle_string() == "(1,2)(3,4)(5,6)");
  CHECK(Permutation::parse_cycles("(1,2)(3,4)(5,6)", 6) == p);
  CHECK(Permutation::parse_cycles("()", 5).is_identity());
  CHECK(Permutation::parse_cycles(" (1, 3,2) ", 3) == cyc(3, {{0, 2, 1}}));
  CHECK_THROWS_AS(Permutation::parse_cycles("(0,1)", 3), qtk::Error);
  CHECK_THROWS_AS(Permutation::parse_cycles("(1,2", 3), qtk::Error);
  CHECK_THROWS_AS(Permutation::parse_cycles("(1,4)", 3), qtk::Error);
}

TEST_CASE("cycle data") {
  const auto p = cyc(7, {{0, 1, 2}, {3, 4}});
  CHECK(p.cycle_lengths() == std::vector<std::size_t>{3, 2, 1, 1});
  CHECK(p.order() == 6);
  CHECK_FALSE(p.is_even());
  CHECK(p.fixed_points() == std::vector<qtk::point_t>{5, 6});
  CHECK(p.first_moved_point() == 0);
  CHECK(Permutation::identity(3).first_moved_point() == 3);
  CHECK(qtk::power(p, 2) == p * p);
  CHECK(qtk::power(p, -1) == p.inverse());
  CHECK(qtk::power(p, 6).is_identity());
}

TEST_CASE("property: inverse, power and conjugation on random permutations") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const auto p = oracle::random_permutation(n, rng);
    const auto g = oracle::random_permutation(n, rng);
    CHECK((p * p.inverse()).is_identity());
    CHECK(oracle::images(p.inverse()) == oracle::inverse(oracle::images(p)));
    const auto c = qtk::conjugate(g, p);
    CHECK(c == g * p * g.inverse());
    CHECK(c.cycle_lengths() == p.cycle_lengths());
    const long long k = static_cast<long long>(rng() % 20) - 10;
    Permutation naive = Permutation::identity(n);
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) naive = naive * p;
    if (k < 0) naive = naive.inverse();
    CHECK(qtk::power(p, k) == naive);
    CHECK(Permutation::parse_cycles(p.to_cycle_string(), n) == p);
  }
}
