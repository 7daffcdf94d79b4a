#pragma once

#include <optional>
#include <vector>

#include "qtk/conjugacy.hpp"
#include "qtk/quandle.hpp"

namespace qtk {

/// Cjg(G, e): the class with x * y = x y x^-1, labelled by cycle strings.
FiniteQuandle conjugation_quandle(const ConjugacyClass& cls);

/// Q(G, H, phi) on the left cosets of H = <subgroup_generators>, with
/// xH * yH = x phi(x^-1 y) H and phi(g) = c g c^-1. Cosets are found by
/// breadth-first search from H and labelled by their smallest element.
/// Throws if c does not normalize G, phi does not fix H, the index exceeds
/// `max_index`, or a well-definedness spot check fails.
FiniteQuandle coset_quandle(const PermutationGroup& group, const std::vector<Permutation>& subgroup_generators,
                            const Permutation& conjugator, std::size_t max_index = 10'000);

/// Elements of a group fixed by conjugation with c (the centralizer of c).
std::vector<Permutation> fixed_subgroup_generators(const PermutationGroup& group, const Permutation& conjugator);

}  // namespace qtk
