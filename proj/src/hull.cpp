#include "qtk/hull.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace qtk {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<point_t>& k) const noexcept { return hash_points(k); }
};

using KeySet = std::unordered_set<std::vector<point_t>, KeyHash>;

bool commutes_with_all(const Permutation& c, std::span<const Permutation> gens) {
  return std::all_of(gens.begin(), gens.end(), [&](const Permutation& g) { return c * g == g * c; });
}

}  // namespace

HullGroup::HullGroup(PermutationGroup L, std::size_t t, Permutation conjugator)
    : L_(std::move(L)), t_(t), c_(std::move(conjugator)), c_inv_(c_.inverse()) {
  if (t_ == 0) throw Error("hull: t must be positive");
  if (c_.degree() != L_.degree()) throw DegreeMismatch(c_.degree(), L_.degree());
  for (const auto& g : L_.generators()) {
    if (!contains(L_, c_ * g * c_inv_)) throw Error("hull: conjugator does not normalize L");
  }
  Permutation power = c_;
  while (!commutes_with_all(power, L_.generators())) {
    power = power * c_;
    ++phi_order_;
  }
  psi_order_ = static_cast<std::uint32_t>(t_) * phi_order_;
}

BigCount HullGroup::order() const {
  BigCount result = psi_order_;
  const BigCount l = group_order(L_);
  for (std::size_t i = 0; i < t_; ++i) result *= l;
  return result;
}

HullElement HullGroup::identity() const {
  return {std::vector<Permutation>(t_, Permutation::identity(L_.degree())), 0};
}

HullElement HullGroup::psi() const {
  HullElement e = identity();
  e.twist = 1 % psi_order_;
  return e;
}

std::vector<Permutation> HullGroup::twist_tuple(const std::vector<Permutation>& tuple, std::uint32_t k) const {
  std::vector<Permutation> cur = tuple;
  for (std::uint32_t step = 0; step < k % psi_order_; ++step) {
    std::vector<Permutation> next;
    next.reserve(t_);
    next.push_back(c_ * cur[t_ - 1] * c_inv_);
    for (std::size_t i = 0; i + 1 < t_; ++i) next.push_back(std::move(cur[i]));
    cur = std::move(next);
  }
  return cur;
}

HullElement HullGroup::multiply(const HullElement& x, const HullElement& y) const {
  auto moved = twist_tuple(y.tuple, x.twist);
  HullElement out;
  out.tuple.reserve(t_);
  for (std::size_t i = 0; i < t_; ++i) out.tuple.push_back(x.tuple[i] * moved[i]);
  out.twist = (x.twist + y.twist) % psi_order_;
  return out;
}

HullElement HullGroup::inverse(const HullElement& x) const {
  std::vector<Permutation> inv;
  inv.reserve(t_);
  for (const auto& l : x.tuple) inv.push_back(l.inverse());
  const std::uint32_t back = (psi_order_ - x.twist) % psi_order_;
  return {twist_tuple(inv, back), back};
}

HullElement HullGroup::conjugate(const HullElement& g, const HullElement& x) const {
  return multiply(multiply(g, x), inverse(g));
}

std::vector<HullElement> HullGroup::generators() const {
  std::vector<HullElement> gens;
  for (const auto& l : L_.generators()) {
    HullElement e = identity();
    e.tuple[0] = l;
    gens.push_back(std::move(e));
  }
  gens.push_back(psi());
  return gens;
}

std::vector<point_t> HullGroup::key(const HullElement& x) const {
  std::vector<point_t> k;
  k.reserve(t_ * L_.degree() + 1);
  for (const auto& l : x.tuple) k.insert(k.end(), l.images().begin(), l.images().end());
  k.push_back(x.twist);
  return k;
}

namespace {

// Size of <gens>, by breadth-first closure; stops early past `stop`.
BigCount closure_size(const HullGroup& G, const std::vector<HullElement>& gens, BigCount stop) {
  KeySet seen;
  std::vector<HullElement> queue{G.identity()};
  seen.insert(G.key(queue.front()));
  for (std::size_t k = 0; k < queue.size() && seen.size() < stop; ++k) {
    for (const auto& g : gens) {
      HullElement y = G.multiply(queue[k], g);
      if (seen.insert(G.key(y)).second) queue.push_back(std::move(y));
    }
  }
  return seen.size();
}

}  // namespace

HullReport hull(const PermutationGroup& L, std::size_t t, const Permutation& conjugator, std::size_t cap) {
  const HullGroup G(L, t, conjugator);
  const auto gens = G.generators();
  HullReport report;
  report.group_order = G.order();

  // class of psi
  std::vector<HullElement> cls{G.psi()};
  KeySet seen{G.key(cls.front())};
  for (std::size_t k = 0; k < cls.size(); ++k) {
    for (const auto& g : gens) {
      HullElement y = G.conjugate(g, cls[k]);
      if (seen.insert(G.key(y)).second) {
        cls.push_back(std::move(y));
        if (cls.size() > cap) throw ClassCapExceeded(cap);
      }
    }
  }
  std::sort(cls.begin(), cls.end());
  std::unordered_map<std::vector<point_t>, std::size_t, KeyHash> index;
  for (std::size_t i = 0; i < cls.size(); ++i) index.emplace(G.key(cls[i]), i);
  report.representative_index = index.at(G.key(G.psi()));

  // generation: grow a generating subset of the class until the order is reached
  std::vector<HullElement> chosen;
  BigCount reached = 1;
  for (const auto& x : cls) {
    if (reached == report.group_order) break;
    chosen.push_back(x);
    const BigCount next = closure_size(G, chosen, report.group_order);
    if (next == reached) chosen.pop_back();
    reached = next;
  }
  report.generated_order = reached;
  if (reached != report.group_order) {
    throw Error("hull: the class generates a subgroup of order " + to_string(reached) + ", not " +
                to_string(report.group_order));
  }

  std::vector<Permutation> action_gens;
  for (const auto& g : gens) {
    std::vector<point_t> images(cls.size());
    for (std::size_t i = 0; i < cls.size(); ++i) images[i] = static_cast<point_t>(index.at(G.key(G.conjugate(g, cls[i]))));
    action_gens.emplace_back(std::move(images));
  }
  report.stabilizer_contains_psi = action_gens.back()(static_cast<point_t>(report.representative_index)) ==
                                   report.representative_index;
  report.action = PermutationGroup(cls.size(), std::move(action_gens));
  report.action_order = group_order(report.action);
  report.center_order = report.group_order / report.action_order;
  report.stabilizer_order = report.group_order / cls.size();

  const Permutation c_inv = conjugator.inverse();
  for (const auto& l : enumerate_elements(L)) report.fixed_order += (conjugator * l * c_inv == l);

  report.primitivity = is_primitive(report.action);
  report.class_elements = std::move(cls);
  return report;
}

}  // namespace qtk
