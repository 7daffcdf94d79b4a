#include "qtk/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qtk {

FiniteQuandle conjugation_quandle(const ConjugacyClass& cls) {
  const std::size_t n = cls.size();
  std::vector<point_t> table(n * n);
  std::vector<point_t> scratch(cls.degree());
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(cls.element(i).to_cycle_string());
    for (std::size_t j = 0; j < n; ++j) {
      conjugate_into(cls.view(i), cls.view(j), scratch);
      table[i * n + j] = static_cast<point_t>(*cls.index_of(scratch));
    }
  }
  return validate(n, std::move(table), std::move(labels));
}

std::vector<Permutation> fixed_subgroup_generators(const PermutationGroup& group, const Permutation& conjugator) {
  StabilizerChain fixed(group.degree());
  for (const auto& g : enumerate_elements(group)) {
    if (conjugator * g == g * conjugator) fixed.extend(g);
  }
  return {fixed.generators().begin(), fixed.generators().end()};
}

namespace {

class CosetSpace {
 public:
  CosetSpace(std::vector<Permutation> subgroup) : subgroup_(std::move(subgroup)) {}

  /// Smallest element of xH.
  Permutation key(const Permutation& x) const {
    Permutation best = x * subgroup_.front();
    for (const auto& h : subgroup_) {
      Permutation y = x * h;
      if (y < best) best = std::move(y);
    }
    return best;
  }

  const std::vector<Permutation>& subgroup() const { return subgroup_; }

 private:
  std::vector<Permutation> subgroup_;
};

}  // namespace

FiniteQuandle coset_quandle(const PermutationGroup& group, const std::vector<Permutation>& subgroup_generators,
                            const Permutation& conjugator, std::size_t max_index) {
  const std::size_t d = group.degree();
  if (conjugator.degree() != d) throw DegreeMismatch(conjugator.degree(), d);
  const Permutation conj_inv = conjugator.inverse();
  auto phi = [&](const Permutation& g) { return conjugator * g * conj_inv; };

  for (const auto& g : group.generators()) {
    if (!contains(group, phi(g))) throw Error("coset_quandle: conjugator does not normalize the group");
  }
  for (const auto& h : subgroup_generators) {
    if (!contains(group, h)) throw Error("coset_quandle: subgroup generator is not in the group");
  }
  const PermutationGroup subgroup(d, subgroup_generators);
  CosetSpace cosets(enumerate_elements(subgroup));
  const std::set<Permutation> h_set(cosets.subgroup().begin(), cosets.subgroup().end());
  for (const auto& h : subgroup_generators) {
    if (!h_set.count(phi(h))) throw Error("coset_quandle: automorphism does not fix the subgroup");
  }

  std::vector<Permutation> reps{cosets.key(Permutation::identity(d))};
  std::map<Permutation, point_t> index{{reps.front(), 0}};
  for (std::size_t k = 0; k < reps.size(); ++k) {
    for (const auto& g : group.generators()) {
      Permutation y = cosets.key(g * reps[k]);
      if (index.count(y)) continue;
      index.emplace(y, static_cast<point_t>(reps.size()));
      reps.push_back(std::move(y));
      if (reps.size() > max_index) throw Error("coset_quandle: index exceeds the bound");
    }
  }

  const std::size_t n = reps.size();
  auto product = [&](const Permutation& x, const Permutation& y) {
    return index.at(cosets.key(x * phi(x.inverse() * y)));
  };
  std::vector<point_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = product(reps[i], reps[j]);
  }
  // the formula must not depend on the chosen coset representatives
  for (const auto& h : subgroup_generators) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (product(reps[i] * h, reps[j] * h) != table[i * n + j]) {
          throw Error("coset_quandle: operation is not well defined on cosets");
        }
      }
    }
  }
  std::vector<std::string> labels;
  for (const auto& r : reps) labels.push_back(r.to_cycle_string());
  return validate(n, std::move(table), std::move(labels));
}

}  // namespace qtk
