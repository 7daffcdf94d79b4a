#pragma once

#include <cstdint>
#include <vector>

#include "qtk/quandle.hpp"

namespace qtk {

using Vector = std::vector<std::uint32_t>;

/// A t x t matrix over Z_p, acting on column vectors. p must be prime.
class LinearMap {
 public:
  LinearMap(std::uint32_t p, std::size_t t, std::vector<std::uint32_t> row_major);
  static LinearMap identity(std::uint32_t p, std::size_t t);
  /// Multiplication by a in Z_p (t = 1).
  static LinearMap scalar(std::uint32_t p, std::uint32_t a);
  /// Companion matrix of the monic polynomial x^t + c_{t-1} x^{t-1} + ... + c_0.
  static LinearMap companion(std::uint32_t p, const std::vector<std::uint32_t>& lower_coefficients);

  std::uint32_t prime() const { return p_; }
  std::size_t dimension() const { return t_; }
  std::uint32_t at(std::size_t row, std::size_t col) const { return m_[row * t_ + col]; }

  Vector apply(const Vector& v) const;
  /// Rank over Z_p by Gaussian elimination.
  std::size_t rank() const;
  bool is_invertible() const { return rank() == t_; }
  /// 1 - f.
  LinearMap one_minus() const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  std::uint32_t p_;
  std::size_t t_;
  std::vector<std::uint32_t> m_;
};

/// Rank of a list of vectors over Z_p.
std::size_t span_rank(std::uint32_t p, std::vector<Vector> vectors);

/// No invariant subspace strictly between 0 and Z_p^t: every nonzero vector
/// has cyclic span of full dimension.
bool is_irreducible(const LinearMap& f);

/// Vectors of Z_p^t in lexicographic order (first coordinate most significant).
Vector vector_at(std::uint32_t p, std::size_t t, std::size_t index);
std::size_t vector_index(std::uint32_t p, const Vector& v);

/// Aff(Z_p^t, f) with a * b = (1 - f)(a) + f(b); f must be invertible.
FiniteQuandle affine_quandle(const LinearMap& f);

/// Every t x t matrix over Z_p, in lexicographic order of the entries.
std::vector<LinearMap> all_linear_maps(std::uint32_t p, std::size_t t);

}  // namespace qtk
