#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtk/blocks.hpp"
#include "qtk/perm_group.hpp"

namespace qtk {

/// Which quandle axiom a table violates.
enum class Axiom { Shape, Idempotence, RowBijectivity, LeftDistributivity };

class QuandleAxiomError : public Error {
 public:
  QuandleAxiomError(Axiom axiom, std::size_t a, std::size_t b, std::size_t c, const std::string& what);
  Axiom axiom() const { return axiom_; }
  /// The failing cell or triple; unused coordinates are zero.
  std::size_t a() const { return a_; }
  std::size_t b() const { return b_; }
  std::size_t c() const { return c_; }

 private:
  Axiom axiom_;
  std::size_t a_, b_, c_;
};

/// A finite quandle as its operation table, table(a, b) = a * b.
/// Elements are opaque indices; labels are carried along for reports only.
class FiniteQuandle {
 public:
  std::size_t size() const { return n_; }
  point_t operator()(point_t a, point_t b) const { return table_[a * n_ + b]; }
  std::span<const point_t> row(point_t a) const { return {table_.data() + a * n_, n_}; }
  /// a \ b, the unique x with a * x = b.
  point_t left_divide(point_t a, point_t b) const { return division_[a * n_ + b]; }
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const FiniteQuandle& x, const FiniteQuandle& y) {
    return x.n_ == y.n_ && x.table_ == y.table_ && x.labels_ == y.labels_;
  }

 private:
  friend FiniteQuandle validate(std::size_t, std::vector<point_t>, std::vector<std::string>);
  FiniteQuandle() = default;

  std::size_t n_ = 0;
  std::vector<point_t> table_;
  std::vector<point_t> division_;
  std::vector<std::string> labels_;
};

/// Checks idempotence, bijective rows and left distributivity, throwing a
/// QuandleAxiomError that names the first failing cell or triple.
/// `flat` is row-major n x n; labels must be empty or of length n.
FiniteQuandle validate(std::size_t n, std::vector<point_t> flat, std::vector<std::string> labels = {});
FiniteQuandle validate(const std::vector<std::vector<point_t>>& table, std::vector<std::string> labels = {});

Permutation left_translation(const FiniteQuandle& q, point_t a);

/// LMlt(Q), generated by every left translation.
PermutationGroup lmlt(const FiniteQuandle& q);
/// Dis(Q), generated by L_x L_0^-1 for every x.
PermutationGroup dis(const FiniteQuandle& q);

bool is_connected(const FiniteQuandle& q);
bool is_faithful(const FiniteQuandle& q);

struct CayleyImage {
  std::vector<Permutation> translations;  // x -> L_x
  bool homomorphism = false;              // L_{a*b} == L_a L_b L_a^-1 everywhere
  bool injective = false;
  /// For connected quandles: size of the class of L_0 in LMlt(Q), and
  /// whether that class equals the set of translations.
  std::optional<std::size_t> class_size;
  bool image_is_class = false;
};

CayleyImage cayley_image(const FiniteQuandle& q);

PrimitivityVerdict is_primitive_quandle(const FiniteQuandle& q);

/// Largest quandle accepted by is_simple.
inline constexpr std::size_t kSimplicityBound = 500;

/// No congruence other than equality and the full relation, where a
/// congruence is an equivalence closed under x~y => a*x ~ a*y, x*a ~ y*a,
/// a\x ~ a\y, x\a ~ y\a. Throws above kSimplicityBound elements.
bool is_simple(const FiniteQuandle& q);

/// Smallest congruence containing every pair (seed[0], seed[i]).
BlockPartition congruence_closure(const FiniteQuandle& q, std::span<const point_t> seed);

/// A bijection f with f(a*b) = f(a)*f(b), or nullopt if none exists.
std::optional<std::vector<point_t>> are_isomorphic(const FiniteQuandle& q1, const FiniteQuandle& q2);

}  // namespace qtk
