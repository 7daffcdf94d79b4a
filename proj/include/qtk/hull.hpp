#pragma once

#include <cstdint>
#include <vector>

#include "qtk/blocks.hpp"
#include "qtk/conjugacy.hpp"
#include "qtk/perm_group.hpp"

namespace qtk {

/// (l_1, ..., l_t) psi^twist in L^t x| <psi>, where
/// psi(l_1, ..., l_t) = (phi(l_t), l_1, ..., l_{t-1}).
struct HullElement {
  std::vector<Permutation> tuple;
  std::uint32_t twist = 0;

  friend bool operator==(const HullElement&, const HullElement&) = default;
  friend auto operator<=>(const HullElement&, const HullElement&) = default;
};

/// The semidirect product L^t x| <psi> with phi(l) = c l c^-1 for a
/// permutation c normalizing L.
class HullGroup {
 public:
  HullGroup(PermutationGroup L, std::size_t t, Permutation conjugator);

  const PermutationGroup& base_group() const { return L_; }
  std::size_t copies() const { return t_; }
  const Permutation& conjugator() const { return c_; }
  /// Order of phi as an automorphism of L.
  std::uint32_t phi_order() const { return phi_order_; }
  /// t * phi_order().
  std::uint32_t psi_order() const { return psi_order_; }
  /// |L|^t * ord(psi).
  BigCount order() const;

  HullElement identity() const;
  /// (1, ..., 1) psi.
  HullElement psi() const;
  HullElement multiply(const HullElement& x, const HullElement& y) const;
  HullElement inverse(const HullElement& x) const;
  HullElement conjugate(const HullElement& g, const HullElement& x) const;
  /// psi^k applied to a tuple.
  std::vector<Permutation> twist_tuple(const std::vector<Permutation>& tuple, std::uint32_t k) const;

  /// (l, 1, ..., 1) for every generator l of L, then psi.
  std::vector<HullElement> generators() const;

  /// Flat key: tuple images followed by the twist.
  std::vector<point_t> key(const HullElement& x) const;

 private:
  PermutationGroup L_;
  std::size_t t_;
  Permutation c_, c_inv_;
  std::uint32_t phi_order_ = 1, psi_order_ = 1;
};

struct HullReport {
  std::vector<HullElement> class_elements;  // sorted
  std::size_t representative_index = 0;      // position of psi
  PermutationGroup action{1, {}};            // conjugation action of the generators on the class
  BigCount group_order = 0;                  // |L|^t ord(psi)
  BigCount generated_order = 0;              // |<class>|
  BigCount action_order = 0;
  BigCount center_order = 0;                 // kernel of the action
  BigCount fixed_order = 0;                  // |fix_L(phi)|, the psi-fixed diagonal
  BigCount stabilizer_order = 0;             // |G| / |class|, before the quotient
  bool stabilizer_contains_psi = false;
  PrimitivityVerdict primitivity;
};

/// The class of psi in L^t x| <psi> and its conjugation action, which realizes
/// the hull G_{L,t,phi} = (L^t x| <psi>)/Z. Throws when the class exceeds
/// `cap` or when the class does not generate the group.
HullReport hull(const PermutationGroup& L, std::size_t t, const Permutation& conjugator,
                std::size_t cap = 1'000'000);

}  // namespace qtk
