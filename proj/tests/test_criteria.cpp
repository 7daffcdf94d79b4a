#include "doctest.h"
#include "oracles.hpp"

#include "qtk/classical_groups.hpp"
#include "qtk/criteria.hpp"

using namespace qtk;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<point_t>> c) { return Permutation::from_cycles(n, c); }

// Naive power criterion: the class by conjugating with every group element,
// then the powers of e that land in it.
bool power_oracle(const PermutationGroup& G, const Permutation& e) {
  std::set<Permutation> cls;
  for (const auto& g : enumerate_elements(G)) cls.insert(g * e * g.inverse());
  std::set<Permutation> powers;
  for (Permutation x = e; !x.is_identity(); x = x * e) {
    if (cls.count(x)) powers.insert(x);
  }
  return powers.size() > 1 && powers.size() < cls.size();
}

}  // namespace

TEST_CASE("cycle types") {
  const CycleType ct({1, 3, 2, 1});
  CHECK(ct.lengths() == std::vector<std::size_t>{3, 2, 1, 1});
  CHECK(ct.n() == 7);
  CHECK(ct.to_string() == "3,2,1,1");
  CHECK_FALSE(ct.is_even());
  CHECK(CycleType::of(cyc(7, {{0, 1, 2}, {3, 4}})) == ct);
  CHECK(CycleType::parse("2,2", 6) == CycleType({2, 2, 1, 1}));
  CHECK(CycleType::parse("3,2,1,1") == ct);
  CHECK(CycleType({1, 1, 1}).is_identity());
  CHECK_THROWS_AS(CycleType({2, 0}), Error);
  CHECK_THROWS_AS(CycleType::parse("2,,1"), Error);
  CHECK_THROWS_AS(CycleType::parse("2,x"), Error);
  CHECK_THROWS_AS(CycleType::parse("5,2", 6), Error);
}

TEST_CASE("power criterion") {
  const auto S5 = symmetric_group(5), A5 = alternating_group(5);
  CHECK(power_criterion(conjugacy_class(S5, cyc(5, {{0, 1, 2}}))));
  CHECK_FALSE(power_criterion(conjugacy_class(S5, cyc(5, {{0, 1}}))));
  const auto five = cyc(5, {{0, 1, 2, 3, 4}});
  CHECK(power_criterion(conjugacy_class(S5, five)) == power_oracle(S5, five));
  CHECK(power_criterion(conjugacy_class(A5, five)) == power_oracle(A5, five));
  CHECK(power_criterion(conjugacy_class(S5, five)));
  // e^-1 is conjugate to e by (1 4)(2 3), an even permutation; e^2 lies in the other A5 class
  CHECK(power_criterion(conjugacy_class(A5, five)));
  CHECK(conjugacy_class(A5, five).contains(five.inverse()));
  CHECK_FALSE(conjugacy_class(A5, five).contains(five * five));

  for (std::size_t n = 5; n <= 6; ++n) {
    for (int alt = 0; alt < 2; ++alt) {
      const auto G = alt ? alternating_group(n) : symmetric_group(n);
      for (const auto& l : integer_partitions(n)) {
        const auto rep = cycle_type_representative(n, l);
        if (alt && !rep.is_even()) continue;
        CHECK(power_criterion(conjugacy_class(G, rep)) == power_oracle(G, rep));
      }
    }
  }
}

TEST_CASE("fixed-set criterion") {
  const auto S5 = symmetric_group(5);
  CHECK(fixed_set_criterion(conjugacy_class(S5, cyc(5, {{0, 1}, {2, 3}}))));
  CHECK(cyc(5, {{0, 2}, {1, 3}}).fixed_points() == cyc(5, {{0, 1}, {2, 3}}).fixed_points());
  CHECK_FALSE(fixed_set_criterion(conjugacy_class(S5, cyc(5, {{0, 1}}))));
  CHECK_FALSE(fixed_set_criterion(conjugacy_class(symmetric_group(6), cyc(6, {{0, 1}, {2, 3}, {4, 5}}))));
  CHECK_FALSE(fixed_set_criterion(conjugacy_class(S5, cyc(5, {{0, 1, 2, 3, 4}}))));
}

TEST_CASE("criterion relations are proper block systems") {
  const auto S5 = symmetric_group(5);
  {
    const auto cls = conjugacy_class(S5, cyc(5, {{0, 1, 2}}));
    const auto action = conjugation_action(cls);
    const auto check = check_power_criterion(cls, action);
    CHECK(check.fires);
    CHECK(check.relation_valid);
    REQUIRE(check.relation);
    CHECK(check.relation->block_size() == 2);  // {g, g^-1}
  }
  {
    const auto cls = conjugacy_class(S5, cyc(5, {{0, 1}, {2, 3}}));
    const auto action = conjugation_action(cls);
    const auto check = check_fixed_set_criterion(cls, action);
    CHECK(check.fires);
    CHECK(check.relation_valid);
    REQUIRE(check.relation);
    CHECK(check.relation->block_count() == 5);
    CHECK(check.relation->block_size() == 3);
  }
  {
    const auto cls = conjugacy_class(S5, cyc(5, {{0, 1}}));
    const auto action = conjugation_action(cls);
    CHECK_FALSE(check_power_criterion(cls, action).fires);
    CHECK(check_power_criterion(cls, action).relation_valid);
    CHECK_THROWS_AS(check_power_criterion(cls, PermutationGroup(3, {})), DegreeMismatch);
  }
}

TEST_CASE("criteria are sound for n <= 7") {
  for (std::size_t n = 5; n <= 7; ++n) {
    for (int alt = 0; alt < 2; ++alt) {
      const auto G = alt ? alternating_group(n) : symmetric_group(n);
      for (const auto& l : integer_partitions(n)) {
        const auto rep = cycle_type_representative(n, l);
        if (rep.is_identity() || (alt && !rep.is_even())) continue;
        const auto cls = conjugacy_class(G, rep);
        const auto action = conjugation_action(cls);
        const auto p = check_power_criterion(cls, action);
        const auto f = check_fixed_set_criterion(cls, action);
        CHECK(p.relation_valid);
        CHECK(f.relation_valid);
        if (p.fires || f.fires) CHECK_FALSE(is_primitive(action).primitive);
      }
    }
  }
}

TEST_CASE("splitting of classes in A_n") {
  CHECK(splits_in_alternating(CycleType({5})));
  CHECK_FALSE(splits_in_alternating(CycleType({3, 1, 1})));
  CHECK_FALSE(splits_in_alternating(CycleType({2, 2, 1})));
  CHECK(splits_in_alternating(CycleType({7, 5, 3, 1})));
  CHECK_THROWS_AS(splits_in_alternating(CycleType({2, 1, 1})), Error);
  // against materialized class sizes
  for (std::size_t n = 2; n <= 10; ++n) {
    const auto S = symmetric_group(n);
    const auto A = n >= 3 ? alternating_group(n) : PermutationGroup(n, {});
    for (const auto& l : integer_partitions(n)) {
      const CycleType ct(l);
      if (!ct.is_even()) continue;
      const auto rep = cycle_type_representative(n, l);
      const std::size_t s = conjugacy_class(S, rep).size();
      const std::size_t a = conjugacy_class(A, rep).size();
      CHECK(static_cast<std::size_t>(symmetric_class_size(l)) == s);
      CHECK(splits_in_alternating(ct) == (2 * a == s));
      if (!splits_in_alternating(ct)) CHECK(a == s);
    }
  }
}

TEST_CASE("predicted verdicts") {
  using enum Verdict;
  const auto inv = [](std::size_t n) { return CycleType(std::vector<std::size_t>(n / 2, 2)); };
  CHECK(predicted_verdict(GroupKind::Sym, 6, inv(6)) == Primitive);
  CHECK(predicted_verdict(GroupKind::Sym, 10, inv(10)) == Primitive);
  CHECK(predicted_verdict(GroupKind::Sym, 8, inv(8)) == NotGenerating);
  CHECK(predicted_verdict(GroupKind::Sym, 12, inv(12)) == NotGenerating);
  CHECK(predicted_verdict(GroupKind::Alt, 8, inv(8)) == Imprimitive);
  CHECK(predicted_verdict(GroupKind::Alt, 12, inv(12)) == Primitive);
  CHECK(predicted_verdict(GroupKind::Alt, 16, inv(16)) == Primitive);
  for (std::size_t n = 5; n <= 12; ++n) {
    CHECK(predicted_verdict(GroupKind::Sym, n, CycleType::parse("2", n)) == Primitive);
    CHECK(predicted_verdict(GroupKind::Sym, n, CycleType::parse("3", n)) == NotGenerating);
    CHECK(predicted_verdict(GroupKind::Alt, n, CycleType::parse("3", n)) == Imprimitive);
    CHECK(predicted_verdict(GroupKind::Sym, n, CycleType::parse("4", n)) == Imprimitive);
    CHECK(predicted_verdict(GroupKind::Sym, n, CycleType::parse("", n)) == NotThisDis);
  }
  CHECK(predicted_verdict(GroupKind::Sym, 7, CycleType::parse("2,2,2", 7)) == Imprimitive);
  CHECK_THROWS_AS(predicted_verdict(GroupKind::Sym, 4, CycleType::parse("2", 4)), Error);
  CHECK_THROWS_AS(predicted_verdict(GroupKind::Sym, 6, CycleType::parse("2", 5)), Error);
  CHECK_THROWS_AS(predicted_verdict(GroupKind::Alt, 6, CycleType::parse("2", 6)), Error);
  CHECK(to_string(NotGenerating) == "not-generating");
  CHECK(to_string(GroupKind::Alt) == "alt");
}
