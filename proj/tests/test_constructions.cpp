#include <array>

#include "doctest.h"
#include "oracles.hpp"

#include "qtk/affine.hpp"
#include "qtk/classical_groups.hpp"
#include "qtk/constructions.hpp"
#include "qtk/hull.hpp"
#include "qtk/projective.hpp"

using namespace qtk;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<point_t>> c) { return Permutation::from_cycles(n, c); }

std::vector<Permutation> gens_of(const PermutationGroup& g) { return {g.generators().begin(), g.generators().end()}; }

std::size_t order_of(const oracle::Images& x) {
  oracle::Images id(x.size());
  std::iota(id.begin(), id.end(), point_t{0});
  oracle::Images y = x;
  std::size_t k = 1;
  while (y != id) {
    y = oracle::compose(x, y);
    ++k;
  }
  return k;
}

std::size_t involutions(const PermutationGroup& g) {
  std::size_t count = 0;
  for (const auto& x : oracle::closure(g.degree(), gens_of(g))) count += order_of(x) == 2;
  return count;
}

}  // namespace

TEST_CASE("GF(9) field axioms") {
  std::vector<GF9Element> all;
  for (std::size_t k = 0; k < 9; ++k) all.push_back(GF9Element::from_index(k));
  const GF9Element zero{0, 0}, one{1, 0};
  for (auto x : all) {
    CHECK(GF9Element::from_index(x.index()) == x);
    CHECK(x + zero == x);
    CHECK(x * one == x);
    CHECK(x + (-x) == zero);
    if (!x.is_zero()) {
      CHECK(x.pow(8) == one);
      CHECK(x * x.inverse() == one);
    }
    for (auto y : all) {
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      for (auto z : all) {
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
      }
    }
  }
  // i^2 = -1 and zeta = 1 + i has order 8
  const GF9Element i{0, 1};
  CHECK(i * i == -one);
  for (unsigned k = 1; k < 8; ++k) CHECK(GF9Element::zeta().pow(k) != one);
  CHECK_THROWS_AS(zero.inverse(), Error);
  // Frobenius is a field automorphism of order 2
  for (auto x : all) {
    CHECK(x.frobenius().frobenius() == x);
    for (auto y : all) CHECK((x * y).frobenius() == x.frobenius() * y.frobenius());
  }
}

TEST_CASE("projective groups over GF(9)") {
  const auto pgl = pgl2_9();
  const auto psl = psl2_9();
  const auto m = m10();
  CHECK(oracle::closure(10, gens_of(pgl)).size() == 720);
  CHECK(oracle::closure(10, gens_of(psl)).size() == 360);
  CHECK(oracle::closure(10, gens_of(m)).size() == 720);
  for (const auto& g : psl.generators()) {
    CHECK(contains(pgl, g));
    CHECK(contains(m, g));
  }
  // socle of index 2: normal in both
  for (const auto& h : psl.generators()) {
    for (const auto& g : pgl.generators()) CHECK(contains(psl, g * h * g.inverse()));
    for (const auto& g : m.generators()) CHECK(contains(psl, g * h * g.inverse()));
  }
  // involution census separates S6, PGL(2,9) and M10
  const auto s6 = involutions(symmetric_group(6));
  const auto a = involutions(pgl);
  const auto b = involutions(m);
  CHECK(s6 == 75);
  CHECK(a == 81);
  CHECK(b == 45);
  CHECK(involution_count(pgl) == a);
  CHECK(involution_count(m) == b);
  // elements of M10 outside the socle have order 4 or 8
  for (const auto& x : oracle::closure(10, gens_of(m))) {
    if (contains(psl, Permutation(x))) continue;
    const auto k = order_of(x);
    CHECK((k == 4 || k == 8));
  }
  CHECK_THROWS_AS(mobius(GF9Element{1, 0}, GF9Element{1, 0}, GF9Element{1, 0}, GF9Element{1, 0}), Error);
}

TEST_CASE("PGL(2,9) is 3-transitive") {
  const auto g = pgl2_9();
  using Triple = std::array<point_t, 3>;
  std::set<Triple> seen{{0, 1, 2}};
  std::vector<Triple> queue{{0, 1, 2}};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& s : g.generators()) {
      Triple t{s(queue[k][0]), s(queue[k][1]), s(queue[k][2])};
      if (seen.insert(t).second) queue.push_back(t);
    }
  }
  CHECK(seen.size() == 10 * 9 * 8);
}

TEST_CASE("linear maps") {
  CHECK_THROWS_AS(LinearMap(4, 1, {1}), Error);
  CHECK_THROWS_AS(LinearMap(3, 1, {3}), Error);
  CHECK_THROWS_AS(LinearMap(3, 2, {1, 0, 0}), Error);
  const auto c = LinearMap::companion(2, {1, 1});
  CHECK(c.rank() == 2);
  CHECK(LinearMap(3, 2, {1, 2, 2, 1}).rank() == 1);
  CHECK(LinearMap::identity(5, 2).one_minus().rank() == 0);
  for (std::size_t i = 0; i < 25; ++i) CHECK(vector_index(5, vector_at(5, 2, i)) == i);
  CHECK(vector_at(3, 2, 5) == Vector{1, 2});
  CHECK(all_linear_maps(2, 2).size() == 16);
}

TEST_CASE("irreducibility against invariant lines") {
  // in dimension 2 the proper nonzero subspaces are the lines
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (const auto& f : all_linear_maps(p, 2)) {
      if (!f.is_invertible()) continue;
      bool invariant_line = false;
      for (std::size_t v = 1; v < p * p; ++v) {
        const Vector x = vector_at(p, 2, v);
        const Vector y = f.apply(x);
        for (std::uint32_t lambda = 0; lambda < p; ++lambda) {
          if ((lambda * x[0]) % p == y[0] && (lambda * x[1]) % p == y[1]) invariant_line = true;
        }
      }
      CHECK(is_irreducible(f) == !invariant_line);
    }
  }
  for (std::uint32_t a = 1; a < 5; ++a) CHECK(is_irreducible(LinearMap::scalar(5, a)));
  CHECK_FALSE(is_irreducible(LinearMap::identity(2, 2)));
  CHECK(is_irreducible(LinearMap::companion(2, {1, 1})));
}

TEST_CASE("affine quandles") {
  const auto q = affine_quandle(LinearMap::scalar(3, 2));
  for (point_t a = 0; a < 3; ++a) {
    for (point_t b = 0; b < 3; ++b) CHECK(q(a, b) == (2 * a + 2 * b) % 3);
  }
  CHECK(is_connected(q));
  // every invariant partition of 3 points under LMlt is trivial
  const auto L = gens_of(lmlt(q));
  std::size_t invariant = 0;
  oracle::for_each_partition(3, [&](const std::vector<int>& label) { invariant += oracle::partition_invariant(label, L); });
  CHECK(invariant == 2);
  CHECK(is_primitive_quandle(q).primitive);

  const auto triv = affine_quandle(LinearMap::identity(3, 2));
  for (point_t a = 0; a < 9; ++a) {
    for (point_t b = 0; b < 9; ++b) CHECK(triv(a, b) == b);
  }

  const auto f = LinearMap::companion(2, {1, 1});
  const auto q4 = affine_quandle(f);
  CHECK(q4.size() == 4);
  CHECK(is_connected(q4));
  CHECK(is_simple(q4));
  CHECK(is_primitive_quandle(q4).primitive);
  CHECK_THROWS_AS(affine_quandle(LinearMap(3, 1, {0})), Error);
}

TEST_CASE("affine displacement group has the order of Im(1-f)") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::size_t t : {1u, 2u}) {
      for (const auto& f : all_linear_maps(p, t)) {
        if (!f.is_invertible()) continue;
        const auto g = f.one_minus();
        std::set<Vector> image;
        std::size_t size = 1;
        for (std::size_t i = 0; i < t; ++i) size *= p;
        for (std::size_t v = 0; v < size; ++v) image.insert(g.apply(vector_at(p, t, v)));
        const auto q = affine_quandle(f);
        CHECK(group_order(dis(q)) == image.size());
        CHECK(is_connected(q) == (image.size() == size));
      }
    }
  }
}

TEST_CASE("conjugation quandles") {
  const auto S5 = symmetric_group(5);
  const auto one = conjugation_quandle(conjugacy_class(S5, Permutation::identity(5)));
  CHECK(one.size() == 1);
  const auto q3 = conjugation_quandle(conjugacy_class(symmetric_group(3), cyc(3, {{0, 1}})));
  CHECK(q3.size() == 3);
  CHECK(is_connected(q3));
  const auto cls = conjugacy_class(S5, cyc(5, {{0, 1}}));
  const auto q = conjugation_quandle(cls);
  CHECK(q.size() == 10);
  for (point_t a = 0; a < 10; ++a) {
    CHECK(q.labels()[a] == cls.element(a).to_cycle_string());
    for (point_t b = 0; b < 10; ++b) CHECK(cls.element(q(a, b)) == conjugate(cls.element(a), cls.element(b)));
  }
  CHECK(is_primitive_quandle(q).primitive);
}

TEST_CASE("coset quandle of the transposition stabilizer") {
  for (std::size_t n : {5u, 6u, 7u}) {
    const auto An = alternating_group(n);
    const auto t = cyc(n, {{0, 1}});
    // (S_2 x S_{n-2}) ∩ A_n: even permutations preserving {0, 1}
    std::vector<Permutation> H;
    for (const auto& g : enumerate_elements(An)) {
      if (g(0) <= 1 && g(1) <= 1) H.push_back(g);
    }
    // order 2 (n-2)! / 2
    CHECK(H.size() == oracle::closure(n - 2, gens_of(symmetric_group(n - 2))).size());
    const auto q = coset_quandle(An, H, t);
    const auto expected = conjugation_quandle(conjugacy_class(symmetric_group(n), t));
    CHECK(q.size() == n * (n - 1) / 2);
    CHECK(are_isomorphic(q, expected).has_value());
    CHECK(fixed_subgroup_generators(An, t).size() >= 1);
    CHECK(group_order(PermutationGroup(n, fixed_subgroup_generators(An, t))) == H.size());
  }
}

TEST_CASE("coset quandle edge cases and errors") {
  const auto A5 = alternating_group(5);
  CHECK(coset_quandle(A5, gens_of(A5), cyc(5, {{0, 1}})).size() == 1);
  // (0 1) does not fix <(0 2 3)>
  CHECK_THROWS_AS(coset_quandle(A5, {cyc(5, {{0, 2, 3}})}, cyc(5, {{0, 1}})), Error);
  // a transposition is not in A5
  CHECK_THROWS_AS(coset_quandle(A5, {cyc(5, {{0, 1}})}, Permutation::identity(5)), Error);
  // (0 5) does not normalize A5 on 6 points
  const auto A5on6 = PermutationGroup(6, {cyc(6, {{0, 1, 2}}), cyc(6, {{0, 1, 2, 3, 4}})});
  CHECK_THROWS_AS(coset_quandle(A5on6, {}, cyc(6, {{0, 5}})), Error);
  CHECK_THROWS_AS(coset_quandle(A5, {}, Permutation::identity(5), 10), Error);
}

TEST_CASE("coset quandle of A6 over the 36-element class") {
  // A6 = PSL(2,9); phi is conjugation by the involution x -> zeta / x of PGL(2,9)
  const auto psl = psl2_9();
  const GF9Element zero{0, 0}, one{1, 0};
  const auto c = mobius(zero, GF9Element::zeta(), one, zero);
  CHECK(c.order() == 2);
  CHECK_FALSE(contains(psl, c));
  const auto fix = fixed_subgroup_generators(psl, c);
  CHECK(group_order(PermutationGroup(10, fix)) == 10);
  const auto q = coset_quandle(psl, fix, c);
  CHECK(q.size() == 36);
  CHECK(is_connected(q));
  const auto source = conjugation_quandle(conjugacy_class(pgl2_9(), c));
  CHECK(source.size() == 36);
  CHECK(are_isomorphic(q, source).has_value());
  CHECK(is_primitive_quandle(q).primitive);
}

TEST_CASE("coset representation over the displacement group") {
  const std::vector<FiniteQuandle> sources{
      conjugation_quandle(conjugacy_class(symmetric_group(5), cyc(5, {{0, 1}}))),
      conjugation_quandle(conjugacy_class(alternating_group(5), cyc(5, {{0, 1, 2}}))),
      conjugation_quandle(conjugacy_class(symmetric_group(4), cyc(4, {{0, 1}}))),
      affine_quandle(LinearMap::scalar(5, 2)), affine_quandle(LinearMap::companion(2, {1, 1})),
      affine_quandle(LinearMap(3, 2, {0, 1, 1, 1}))};
  for (const auto& q : sources) {
    REQUIRE(is_connected(q));
    const auto D = dis(q);
    const auto H = point_stabilizer_generators(D, 0);
    const auto r = coset_quandle(D, H, left_translation(q, 0));
    CHECK(r.size() == q.size());
    CHECK(are_isomorphic(r, q).has_value());
  }
}

TEST_CASE("hull element arithmetic") {
  const auto A5 = alternating_group(5);
  const HullGroup G(A5, 2, cyc(5, {{0, 1}}));
  CHECK(G.phi_order() == 2);
  CHECK(G.psi_order() == 4);
  CHECK(G.order() == 14400);
  // psi(l1, l2) = (phi(l2), l1)
  const auto a = cyc(5, {{0, 1, 2}}), b = cyc(5, {{2, 3, 4}}), t = cyc(5, {{0, 1}});
  const auto moved = G.twist_tuple({a, b}, 1);
  CHECK(moved[0] == t * b * t);
  CHECK(moved[1] == a);
  CHECK(G.twist_tuple({a, b}, 4) == std::vector<Permutation>{a, b});

  std::mt19937 rng(11);
  const auto gens = G.generators();
  auto random_element = [&] {
    HullElement x = G.identity();
    for (int k = 0; k < 12; ++k) x = G.multiply(x, gens[rng() % gens.size()]);
    return x;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_element(), y = random_element(), z = random_element();
    CHECK(G.multiply(G.multiply(x, y), z) == G.multiply(x, G.multiply(y, z)));
    CHECK(G.multiply(x, G.inverse(x)) == G.identity());
    CHECK(G.multiply(G.inverse(x), x) == G.identity());
  }
  CHECK_THROWS_AS(HullGroup(A5, 0, Permutation::identity(5)), Error);
  CHECK_THROWS_AS(HullGroup(PermutationGroup(5, {cyc(5, {{0, 1, 2}})}), 2, cyc(5, {{0, 3}})), Error);
}

TEST_CASE("hulls of A5 with t = 2") {
  const auto A5 = alternating_group(5);
  const auto id = hull(A5, 2, Permutation::identity(5));
  CHECK(id.class_elements.size() == 60);
  CHECK(id.primitivity.primitive);
  CHECK(id.group_order == 7200);
  CHECK(id.generated_order == 7200);
  CHECK(id.stabilizer_order == 120);
  CHECK(id.stabilizer_order == id.fixed_order * 2);
  CHECK(id.stabilizer_contains_psi);

  const auto outer = hull(A5, 2, cyc(5, {{0, 1}}));
  CHECK_FALSE(outer.primitivity.primitive);
  REQUIRE(outer.primitivity.witness);
  CHECK_FALSE(outer.primitivity.witness->is_trivial());
  CHECK(outer.primitivity.witness->is_invariant(outer.action.generators()));
  CHECK(outer.fixed_order == 6);
  CHECK(outer.stabilizer_order == outer.fixed_order * 4);
  CHECK(outer.class_elements.size() == 600);
  CHECK(outer.generated_order == outer.group_order);
}

TEST_CASE("hulls with t = 1") {
  const auto A5 = alternating_group(5);
  // phi = 1 makes psi trivial: the class is a single element and cannot generate
  CHECK_THROWS_AS(hull(A5, 1, Permutation::identity(5)), Error);
  // inner phi: the class of (1, phi) has the size of the class of (0 1 2) in A5,
  // and the centre <(c^-1, psi)> of order 3 is the action kernel
  const auto h = hull(A5, 1, cyc(5, {{0, 1, 2}}));
  CHECK(h.class_elements.size() == 20);
  CHECK(h.group_order == 180);
  CHECK(h.center_order == 3);
  CHECK(h.action_order == 60);
  CHECK_FALSE(h.primitivity.primitive);
  CHECK_THROWS_AS(hull(A5, 2, cyc(5, {{0, 1}}), 100), ClassCapExceeded);
}
