#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qtk/perm_group.hpp"

namespace qtk {

/// Largest class the toolkit will materialize.
inline constexpr std::size_t kClassCap = 1'000'000;

class ClassCapExceeded : public Error {
 public:
  explicit ClassCapExceeded(std::size_t cap);
};

/// The conjugacy class of a permutation in a permutation group, fully
/// materialized. Members are kept in lexicographic order of their image arrays
/// in one flat buffer; lookup is by open addressing.
class ConjugacyClass {
 public:
  const PermutationGroup& ambient() const { return ambient_; }
  std::size_t size() const { return count_; }
  std::size_t degree() const { return degree_; }

  std::span<const point_t> view(std::size_t i) const {
    return {data_.data() + i * degree_, degree_};
  }
  Permutation element(std::size_t i) const;
  std::vector<Permutation> elements() const;

  std::size_t representative_index() const { return rep_index_; }
  Permutation representative() const { return element(rep_index_); }

  std::optional<std::size_t> index_of(std::span<const point_t> images) const;
  std::optional<std::size_t> index_of(const Permutation& p) const { return index_of(p.images()); }
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

 private:
  friend ConjugacyClass conjugacy_class(const PermutationGroup&, const Permutation&, std::size_t);

  explicit ConjugacyClass(const PermutationGroup& ambient) : ambient_(ambient), degree_(ambient.degree()) {}

  std::size_t insert(std::span<const point_t> images);  // returns index, existing or new
  void rebuild_index();
  void canonicalize();

  PermutationGroup ambient_;
  std::size_t degree_;
  std::size_t count_ = 0;
  std::size_t rep_index_ = 0;
  std::vector<point_t> data_;
  std::vector<std::uint32_t> slots_;  // 0 = empty, else index + 1
};

/// Closure of {e} under conjugation by the generators of `group`.
/// Throws when e is not in the group or the class exceeds `cap`.
ConjugacyClass conjugacy_class(const PermutationGroup& group, const Permutation& e,
                               std::size_t cap = kClassCap);

/// Permutation of class positions induced by conjugation with g.
Permutation conjugation_image(const ConjugacyClass& cls, const Permutation& g);

/// Action on the class by the given conjugators, one action generator per
/// conjugator. Throws if the class is not closed under them.
PermutationGroup conjugation_action(const ConjugacyClass& cls, std::span<const Permutation> conjugators);
/// Action by the ambient group's generators.
PermutationGroup conjugation_action(const ConjugacyClass& cls);

/// Generators of the centralizer of the class representative in the ambient
/// group (natural degree), taken from Schreier generators of the class
/// orbit until the order |G| / |class| is reached.
std::vector<Permutation> centralizer_generators(const ConjugacyClass& cls);
/// Same, reusing an already computed action by the ambient generators.
std::vector<Permutation> centralizer_generators(const ConjugacyClass& cls, const PermutationGroup& action);

/// Order of the subgroup generated by the class members.
BigCount generated_order(const ConjugacyClass& cls);

}  // namespace qtk
