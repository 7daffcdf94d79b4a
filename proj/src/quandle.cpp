#include "qtk/quandle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "qtk/conjugacy.hpp"
#include "qtk/detail/union_find.hpp"

namespace qtk {

namespace {

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Shape: return "shape";
    case Axiom::Idempotence: return "idempotence";
    case Axiom::RowBijectivity: return "row bijectivity";
    case Axiom::LeftDistributivity: return "left distributivity";
  }
  return "?";
}

}  // namespace

QuandleAxiomError::QuandleAxiomError(Axiom axiom, std::size_t a, std::size_t b, std::size_t c,
                                     const std::string& what)
    : Error(std::string(axiom_name(axiom)) + " violated: " + what), axiom_(axiom), a_(a), b_(b), c_(c) {}

FiniteQuandle validate(std::size_t n, std::vector<point_t> flat, std::vector<std::string> labels) {
  if (flat.size() != n * n) throw QuandleAxiomError(Axiom::Shape, 0, 0, 0, "table is not n x n");
  if (!labels.empty() && labels.size() != n) throw QuandleAxiomError(Axiom::Shape, 0, 0, 0, "label count differs from n");
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (flat[i] >= n) {
      throw QuandleAxiomError(Axiom::Shape, i / n, i % n, 0,
                              "entry (" + std::to_string(i / n) + "," + std::to_string(i % n) + ") out of range");
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return flat[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a) {
    if (at(a, a) != a) throw QuandleAxiomError(Axiom::Idempotence, a, a, 0, std::to_string(a) + "*" + std::to_string(a) + " != " + std::to_string(a));
  }
  std::vector<point_t> division(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> seen(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      point_t y = at(a, b);
      if (seen[y]) {
        throw QuandleAxiomError(Axiom::RowBijectivity, a, b, 0,
                                "row " + std::to_string(a) + " repeats value " + std::to_string(y));
      }
      seen[y] = true;
      division[a * n + y] = static_cast<point_t>(b);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const point_t ab = at(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (at(a, at(b, c)) != at(ab, at(a, c))) {
          throw QuandleAxiomError(Axiom::LeftDistributivity, a, b, c,
                                  "a*(b*c) != (a*b)*(a*c) at (" + std::to_string(a) + "," + std::to_string(b) +
                                      "," + std::to_string(c) + ")");
        }
      }
    }
  }
  FiniteQuandle q;
  q.n_ = n;
  q.table_ = std::move(flat);
  q.division_ = std::move(division);
  q.labels_ = std::move(labels);
  return q;
}

FiniteQuandle validate(const std::vector<std::vector<point_t>>& table, std::vector<std::string> labels) {
  const std::size_t n = table.size();
  std::vector<point_t> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw QuandleAxiomError(Axiom::Shape, 0, 0, 0, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate(n, std::move(flat), std::move(labels));
}

Permutation left_translation(const FiniteQuandle& q, point_t a) {
  auto r = q.row(a);
  return Permutation(std::vector<point_t>(r.begin(), r.end()));
}

PermutationGroup lmlt(const FiniteQuandle& q) {
  std::vector<Permutation> gens;
  for (point_t a = 0; a < q.size(); ++a) gens.push_back(left_translation(q, a));
  return PermutationGroup(q.size(), std::move(gens));
}

PermutationGroup dis(const FiniteQuandle& q) {
  std::vector<Permutation> gens;
  if (q.size() > 0) {
    const Permutation base_inv = left_translation(q, 0).inverse();
    for (point_t a = 1; a < q.size(); ++a) gens.push_back(left_translation(q, a) * base_inv);
  }
  return PermutationGroup(q.size(), std::move(gens));
}

bool is_connected(const FiniteQuandle& q) {
  if (q.size() == 0) return true;
  return is_transitive(lmlt(q));
}

bool is_faithful(const FiniteQuandle& q) {
  std::set<std::vector<point_t>> rows;
  for (point_t a = 0; a < q.size(); ++a) {
    auto r = q.row(a);
    if (!rows.emplace(r.begin(), r.end()).second) return false;
  }
  return true;
}

CayleyImage cayley_image(const FiniteQuandle& q) {
  CayleyImage out;
  for (point_t a = 0; a < q.size(); ++a) out.translations.push_back(left_translation(q, a));
  out.homomorphism = true;
  for (point_t a = 0; a < q.size() && out.homomorphism; ++a) {
    for (point_t b = 0; b < q.size(); ++b) {
      if (out.translations[q(a, b)] != conjugate(out.translations[a], out.translations[b])) {
        out.homomorphism = false;
        break;
      }
    }
  }
  if (!out.homomorphism) throw Error("cayley_image: translation map is not a homomorphism");
  std::set<Permutation> distinct(out.translations.begin(), out.translations.end());
  out.injective = distinct.size() == q.size();
  if (q.size() > 0 && is_connected(q)) {
    const auto group = lmlt(q);
    const auto cls = conjugacy_class(group, out.translations[0]);
    out.class_size = cls.size();
    std::set<Permutation> members;
    for (std::size_t i = 0; i < cls.size(); ++i) members.insert(cls.element(i));
    out.image_is_class = members == distinct;
  }
  return out;
}

PrimitivityVerdict is_primitive_quandle(const FiniteQuandle& q) {
  if (q.size() <= 1) return PrimitivityVerdict{false, std::nullopt};
  return is_primitive(lmlt(q));
}

BlockPartition congruence_closure(const FiniteQuandle& q, std::span<const point_t> seed) {
  const std::size_t n = q.size();
  detail::UnionFind uf(n);
  std::deque<std::pair<point_t, point_t>> pending;
  for (std::size_t i = 1; i < seed.size(); ++i) {
    if (uf.unite(seed[0], seed[i])) pending.emplace_back(seed[0], seed[i]);
  }
  auto merge = [&](point_t u, point_t v) {
    if (uf.unite(u, v)) pending.emplace_back(u, v);
  };
  while (!pending.empty()) {
    auto [x, y] = pending.front();
    pending.pop_front();
    for (point_t a = 0; a < n; ++a) {
      merge(q(a, x), q(a, y));
      merge(q(x, a), q(y, a));
      merge(q.left_divide(a, x), q.left_divide(a, y));
      merge(q.left_divide(x, a), q.left_divide(y, a));
    }
  }
  return BlockPartition(uf.classes());
}

bool is_simple(const FiniteQuandle& q) {
  const std::size_t n = q.size();
  if (n > kSimplicityBound) throw Error("is_simple: quandle exceeds the size bound of " + std::to_string(kSimplicityBound));
  if (n <= 1) return false;
  // For a connected quandle every congruence class can be moved onto 0 by an
  // automorphism, so seeds (0, x) suffice; otherwise try every pair.
  if (is_connected(q)) {
    for (point_t x = 1; x < n; ++x) {
      const point_t seed[] = {0, x};
      if (congruence_closure(q, seed).block_count() != 1) return false;
    }
    return true;
  }
  for (point_t x = 0; x < n; ++x) {
    for (point_t y = x + 1; y < n; ++y) {
      const point_t seed[] = {x, y};
      if (congruence_closure(q, seed).block_count() != 1) return false;
    }
  }
  return true;
}

namespace {

using Invariant = std::vector<std::size_t>;

std::vector<Invariant> element_invariants(const FiniteQuandle& q) {
  const std::size_t n = q.size();
  std::vector<Invariant> inv(n);
  for (point_t x = 0; x < n; ++x) {
    Invariant v = left_translation(q, x).cycle_lengths();
    std::size_t right_fixed = 0;  // y with y * x = x
    std::set<point_t> column;
    for (point_t y = 0; y < n; ++y) {
      if (q(y, x) == x) ++right_fixed;
      column.insert(q(y, x));
    }
    v.push_back(right_fixed);
    v.push_back(column.size());
    inv[x] = std::move(v);
  }
  return inv;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const FiniteQuandle& q1, const FiniteQuandle& q2)
      : q1_(q1), q2_(q2), n_(q1.size()), inv1_(element_invariants(q1)), inv2_(element_invariants(q2)) {
    std::map<Invariant, std::size_t> frequency;
    for (const auto& v : inv1_) ++frequency[v];
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), point_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](point_t a, point_t b) {
      return frequency[inv1_[a]] < frequency[inv1_[b]];
    });
  }

  std::optional<std::vector<point_t>> run() {
    std::multiset<Invariant> m1(inv1_.begin(), inv1_.end());
    std::multiset<Invariant> m2(inv2_.begin(), inv2_.end());
    if (m1 != m2) return std::nullopt;
    std::vector<int> forward(n_, -1), backward(n_, -1);
    if (search(forward, backward)) {
      return std::vector<point_t>(forward.begin(), forward.end());
    }
    return std::nullopt;
  }

 private:
  // Assign a -> b and everything it forces through closure under *.
  bool assign(std::vector<int>& fwd, std::vector<int>& bwd, point_t a, point_t b) const {
    std::vector<point_t> assigned;
    for (point_t x = 0; x < n_; ++x) {
      if (fwd[x] >= 0) assigned.push_back(x);
    }
    std::deque<std::pair<point_t, point_t>> queue{{a, b}};
    while (!queue.empty()) {
      auto [x, y] = queue.front();
      queue.pop_front();
      if (fwd[x] >= 0 || bwd[y] >= 0) {
        if (fwd[x] != static_cast<int>(y) || bwd[y] != static_cast<int>(x)) return false;
        continue;
      }
      if (inv1_[x] != inv2_[y]) return false;
      fwd[x] = static_cast<int>(y);
      bwd[y] = static_cast<int>(x);
      assigned.push_back(x);
      for (point_t z : assigned) {
        const point_t fz = static_cast<point_t>(fwd[z]);
        queue.emplace_back(q1_(x, z), q2_(y, fz));
        queue.emplace_back(q1_(z, x), q2_(fz, y));
      }
    }
    return true;
  }

  bool search(std::vector<int>& fwd, std::vector<int>& bwd) const {
    point_t next = static_cast<point_t>(n_);
    for (point_t a : order_) {
      if (fwd[a] < 0) {
        next = a;
        break;
      }
    }
    if (next == n_) return verify(fwd);
    for (point_t b = 0; b < n_; ++b) {
      if (bwd[b] >= 0 || inv2_[b] != inv1_[next]) continue;
      auto f = fwd;
      auto g = bwd;
      if (assign(f, g, next, b) && search(f, g)) {
        fwd = std::move(f);
        bwd = std::move(g);
        return true;
      }
    }
    return false;
  }

  bool verify(const std::vector<int>& fwd) const {
    for (point_t a = 0; a < n_; ++a) {
      for (point_t b = 0; b < n_; ++b) {
        if (static_cast<point_t>(fwd[q1_(a, b)]) != q2_(static_cast<point_t>(fwd[a]), static_cast<point_t>(fwd[b]))) {
          return false;
        }
      }
    }
    return true;
  }

  const FiniteQuandle& q1_;
  const FiniteQuandle& q2_;
  std::size_t n_;
  std::vector<Invariant> inv1_, inv2_;
  std::vector<point_t> order_;
};

}  // namespace

std::optional<std::vector<point_t>> are_isomorphic(const FiniteQuandle& q1, const FiniteQuandle& q2) {
  if (q1.size() != q2.size()) return std::nullopt;
  return IsomorphismSearch(q1, q2).run();
}

}  // namespace qtk
