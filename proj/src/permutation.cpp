#include "qtk/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace qtk {

std::string to_string(BigCount value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

DegreeMismatch::DegreeMismatch(std::size_t lhs, std::size_t rhs)
    : Error("degree mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}

Permutation::Permutation(std::vector<point_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (point_t y : images_) {
    if (y >= images_.size() || seen[y]) {
      throw Error("image array is not a bijection");
    }
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<point_t> id(degree);
  std::iota(id.begin(), id.end(), point_t{0});
  return Permutation(std::move(id), unchecked_tag{});
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<point_t>>& cycles) {
  std::vector<point_t> images(degree);
  std::iota(images.begin(), images.end(), point_t{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      point_t x = cycle[i];
      if (x >= degree) throw Error("cycle point out of range");
      if (used[x]) throw Error("cycles are not disjoint");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images), unchecked_tag{});
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<point_t>> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw Error("malformed cycle string: " + std::string(text));
    ++pos;
    std::vector<point_t> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw Error("malformed cycle string: " + std::string(text));
      unsigned long value = std::stoul(std::string(text.substr(start, pos - start)));
      if (value == 0) throw Error("cycle points are 1-based");
      cycle.push_back(static_cast<point_t>(value - 1));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size()) throw Error("unterminated cycle: " + std::string(text));
    ++pos;
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<point_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<point_t>(i);
  return Permutation(std::move(inv), unchecked_tag{});
}

point_t Permutation::first_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<point_t>(i);
  }
  return static_cast<point_t>(images_.size());
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (std::size_t len : cycle_lengths()) result = std::lcm(result, len);
  return result;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (std::size_t len : cycle_lengths()) transpositions += len - 1;
  return transpositions % 2 == 0;
}

std::vector<point_t> Permutation::fixed_points() const {
  std::vector<point_t> fixed;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == i) fixed.push_back(static_cast<point_t>(i));
  }
  return fixed;
}

std::vector<std::size_t> Permutation::cycle_lengths() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (point_t x = static_cast<point_t>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::vector<std::vector<point_t>> Permutation::cycles() const {
  std::vector<std::vector<point_t>> result;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<point_t> cycle;
    for (point_t x = static_cast<point_t>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cyc) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out << ',';
      out << cycle[i] + 1;
    }
    out << ')';
  }
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
  std::vector<point_t> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.images_[q.images_[i]];
  return Permutation(std::move(out), Permutation::unchecked_tag{});
}

void conjugate_into(std::span<const point_t> g, std::span<const point_t> x,
                    std::span<point_t> out) {
  // (g x g^-1)(g(i)) = g(x(i))
  for (std::size_t i = 0; i < x.size(); ++i) out[g[i]] = g[x[i]];
}

Permutation conjugate(const Permutation& g, const Permutation& x) {
  if (g.degree() != x.degree()) throw DegreeMismatch(g.degree(), x.degree());
  std::vector<point_t> out(x.degree());
  conjugate_into(g.images_, x.images_, out);
  return Permutation(std::move(out), Permutation::unchecked_tag{});
}

Permutation power(const Permutation& p, long long k) {
  std::size_t ord = p.order();
  long long e = k % static_cast<long long>(ord);
  if (e < 0) e += static_cast<long long>(ord);
  std::vector<point_t> out(p.degree());
  // walk each cycle once
  std::vector<bool> seen(p.degree(), false);
  std::vector<point_t> cycle;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    cycle.clear();
    for (point_t x = static_cast<point_t>(i); !seen[x]; x = p.images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    std::size_t shift = static_cast<std::size_t>(e) % cycle.size();
    for (std::size_t j = 0; j < cycle.size(); ++j) out[cycle[j]] = cycle[(j + shift) % cycle.size()];
  }
  return Permutation(std::move(out), Permutation::unchecked_tag{});
}

std::size_t hash_points(std::span<const point_t> points) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (point_t x : points) {
    h ^= x;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  return hash_points(p.images());
}

}  // namespace qtk
