#include "qtk/affine.hpp"

#include <string>

namespace qtk {

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // p is prime: a^(p-2)
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

LinearMap::LinearMap(std::uint32_t p, std::size_t t, std::vector<std::uint32_t> row_major)
    : p_(p), t_(t), m_(std::move(row_major)) {
  if (!is_prime(p)) throw Error("LinearMap: modulus " + std::to_string(p) + " is not prime");
  if (t == 0) throw Error("LinearMap: dimension must be positive");
  if (m_.size() != t * t) throw Error("LinearMap: expected " + std::to_string(t * t) + " entries");
  for (auto x : m_) {
    if (x >= p) throw Error("LinearMap: entry out of range for the modulus");
  }
}

LinearMap LinearMap::identity(std::uint32_t p, std::size_t t) {
  std::vector<std::uint32_t> m(t * t, 0);
  for (std::size_t i = 0; i < t; ++i) m[i * t + i] = 1;
  return LinearMap(p, t, std::move(m));
}

LinearMap LinearMap::scalar(std::uint32_t p, std::uint32_t a) { return LinearMap(p, 1, {a % p}); }

LinearMap LinearMap::companion(std::uint32_t p, const std::vector<std::uint32_t>& c) {
  const std::size_t t = c.size();
  std::vector<std::uint32_t> m(t * t, 0);
  for (std::size_t i = 1; i < t; ++i) m[i * t + (i - 1)] = 1;
  for (std::size_t i = 0; i < t; ++i) m[i * t + (t - 1)] = (p - c[i] % p) % p;
  return LinearMap(p, t, std::move(m));
}

Vector LinearMap::apply(const Vector& v) const {
  Vector out(t_, 0);
  for (std::size_t i = 0; i < t_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < t_; ++j) acc += static_cast<std::uint64_t>(m_[i * t_ + j]) * v[j];
    out[i] = static_cast<std::uint32_t>(acc % p_);
  }
  return out;
}

std::size_t span_rank(std::uint32_t p, std::vector<Vector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t inv = mod_inverse(rows[rank][c], p);
    for (auto& x : rows[rank]) x = static_cast<std::uint32_t>(x * inv % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::uint64_t factor = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) {
        rows[r][k] = static_cast<std::uint32_t>((rows[r][k] + (p - factor) * rows[rank][k]) % p);
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t LinearMap::rank() const {
  std::vector<Vector> rows(t_, Vector(t_));
  for (std::size_t i = 0; i < t_; ++i) {
    for (std::size_t j = 0; j < t_; ++j) rows[i][j] = m_[i * t_ + j];
  }
  return span_rank(p_, std::move(rows));
}

LinearMap LinearMap::one_minus() const {
  std::vector<std::uint32_t> m(t_ * t_);
  for (std::size_t i = 0; i < t_; ++i) {
    for (std::size_t j = 0; j < t_; ++j) {
      std::uint32_t id = (i == j) ? 1 : 0;
      m[i * t_ + j] = (id + p_ - m_[i * t_ + j]) % p_;
    }
  }
  return LinearMap(p_, t_, std::move(m));
}

Vector vector_at(std::uint32_t p, std::size_t t, std::size_t index) {
  Vector v(t);
  for (std::size_t i = t; i-- > 0;) {
    v[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return v;
}

std::size_t vector_index(std::uint32_t p, const Vector& v) {
  std::size_t index = 0;
  for (auto x : v) index = index * p + x;
  return index;
}

bool is_irreducible(const LinearMap& f) {
  const std::uint32_t p = f.prime();
  const std::size_t t = f.dimension();
  std::size_t count = 1;
  for (std::size_t i = 0; i < t; ++i) count *= p;
  for (std::size_t idx = 1; idx < count; ++idx) {
    // span of v, f v, ..., f^{t-1} v is the smallest f-invariant subspace containing v
    std::vector<Vector> krylov{vector_at(p, t, idx)};
    for (std::size_t k = 1; k < t; ++k) krylov.push_back(f.apply(krylov.back()));
    if (span_rank(p, krylov) < t) return false;
  }
  return true;
}

FiniteQuandle affine_quandle(const LinearMap& f) {
  if (!f.is_invertible()) throw Error("affine_quandle: f is singular");
  const std::uint32_t p = f.prime();
  const std::size_t t = f.dimension();
  const LinearMap g = f.one_minus();
  std::size_t n = 1;
  for (std::size_t i = 0; i < t; ++i) n *= p;
  std::vector<Vector> ga(n), fb(n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector v = vector_at(p, t, i);
    ga[i] = g.apply(v);
    fb[i] = f.apply(v);
    std::string label = "(";
    for (std::size_t k = 0; k < t; ++k) label += (k ? "," : "") + std::to_string(v[k]);
    labels[i] = label + ")";
  }
  std::vector<point_t> table(n * n);
  Vector sum(t);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < t; ++k) sum[k] = (ga[a][k] + fb[b][k]) % p;
      table[a * n + b] = static_cast<point_t>(vector_index(p, sum));
    }
  }
  return validate(n, std::move(table), std::move(labels));
}

std::vector<LinearMap> all_linear_maps(std::uint32_t p, std::size_t t) {
  std::size_t entries = t * t;
  std::size_t count = 1;
  for (std::size_t i = 0; i < entries; ++i) count *= p;
  std::vector<LinearMap> out;
  out.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    Vector v = vector_at(p, entries, idx);
    out.emplace_back(p, t, std::vector<std::uint32_t>(v.begin(), v.end()));
  }
  return out;
}

}  // namespace qtk
