#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtk/blocks.hpp"
#include "qtk/conjugacy.hpp"

namespace qtk {

/// Multiset of cycle lengths, fixed points included, kept in decreasing order.
class CycleType {
 public:
  /// Lengths must be positive; order is irrelevant.
  explicit CycleType(std::vector<std::size_t> lengths);
  static CycleType of(const Permutation& p) { return CycleType(p.cycle_lengths()); }
  /// Parses "3,2,1"; 1-cycles may be left out when n is given.
  static CycleType parse(const std::string& text, std::size_t n = 0);

  std::size_t n() const { return n_; }
  const std::vector<std::size_t>& lengths() const { return lengths_; }
  bool is_even() const;
  bool is_identity() const { return lengths_.empty() || lengths_.front() == 1; }
  /// "3,2,1".
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;

 private:
  std::vector<std::size_t> lengths_;
  std::size_t n_ = 0;
};

/// 1 < |<e> ∩ e^G| < |e^G| for the class representative e.
bool power_criterion(const ConjugacyClass& cls);

/// Some f != e in the class has fix(f) = fix(e), and that set is nonempty.
bool fixed_set_criterion(const ConjugacyClass& cls);

/// A criterion verdict together with the equivalence from its proof,
/// checked on the materialized class.
struct CriterionCheck {
  bool fires = false;
  /// When firing: the relation is symmetric, is a proper partition and is
  /// invariant under the given action. Vacuously true otherwise.
  bool relation_valid = true;
  std::optional<BlockPartition> relation;
};

/// g ~ h iff h is a power of g.
CriterionCheck check_power_criterion(const ConjugacyClass& cls, const PermutationGroup& action);
/// g ~ h iff fix(g) = fix(h).
CriterionCheck check_fixed_set_criterion(const ConjugacyClass& cls, const PermutationGroup& action);

/// Whether the S_n class of this even type splits into two A_n classes: no
/// cycle of even length and no repeated odd length. Throws for odd types.
bool splits_in_alternating(const CycleType& ct);

enum class GroupKind { Sym, Alt };
enum class Verdict { Primitive, Imprimitive, NotGenerating, NotThisDis };

std::string to_string(GroupKind kind);
std::string to_string(Verdict verdict);

/// The classification for Cjg(G, e) with G = S_n or A_n, n >= 5:
///  - S_n: transpositions and, for n = 2 mod 4, fixed-point-free involutions
///    are primitive; even types generate only A_n; the rest is imprimitive.
///  - A_n: fixed-point-free involutions with 4 | n >= 12 are primitive; the
///    rest (including n = 8) is imprimitive.
/// The identity class yields NotThisDis. Throws for n < 5, a type of the
/// wrong size, or an odd type under A_n.
Verdict predicted_verdict(GroupKind kind, std::size_t n, const CycleType& ct);

}  // namespace qtk
