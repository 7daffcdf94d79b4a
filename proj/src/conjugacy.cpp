#include "qtk/conjugacy.hpp"

#include <algorithm>
#include <numeric>

namespace qtk {

ClassCapExceeded::ClassCapExceeded(std::size_t cap)
    : Error("conjugacy class exceeds the cap of " + std::to_string(cap) + " elements") {}

Permutation ConjugacyClass::element(std::size_t i) const {
  auto v = view(i);
  return Permutation(std::vector<point_t>(v.begin(), v.end()));
}

std::vector<Permutation> ConjugacyClass::elements() const {
  std::vector<Permutation> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < count_; ++i) out.push_back(element(i));
  return out;
}

std::optional<std::size_t> ConjugacyClass::index_of(std::span<const point_t> images) const {
  if (images.size() != degree_ || slots_.empty()) return std::nullopt;
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t s = hash_points(images) & mask;; s = (s + 1) & mask) {
    std::uint32_t v = slots_[s];
    if (v == 0) return std::nullopt;
    auto candidate = view(v - 1);
    if (std::equal(candidate.begin(), candidate.end(), images.begin())) return v - 1;
  }
}

std::size_t ConjugacyClass::insert(std::span<const point_t> images) {
  if (slots_.empty() || 2 * (count_ + 1) > slots_.size()) {
    slots_.assign(std::max<std::size_t>(64, slots_.size() * 2), 0);
    rebuild_index();
  }
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash_points(images) & mask;
  for (;; s = (s + 1) & mask) {
    std::uint32_t v = slots_[s];
    if (v == 0) break;
    auto candidate = view(v - 1);
    if (std::equal(candidate.begin(), candidate.end(), images.begin())) return v - 1;
  }
  data_.insert(data_.end(), images.begin(), images.end());
  slots_[s] = static_cast<std::uint32_t>(++count_);
  return count_ - 1;
}

void ConjugacyClass::rebuild_index() {
  std::fill(slots_.begin(), slots_.end(), 0);
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t i = 0; i < count_; ++i) {
    std::size_t s = hash_points(view(i)) & mask;
    while (slots_[s] != 0) s = (s + 1) & mask;
    slots_[s] = static_cast<std::uint32_t>(i + 1);
  }
}

void ConjugacyClass::canonicalize() {
  std::vector<std::size_t> order(count_);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
    auto x = view(a);
    auto y = view(b);
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  std::vector<point_t> sorted;
  sorted.reserve(data_.size());
  std::size_t new_rep = 0;
  for (std::size_t k = 0; k < count_; ++k) {
    if (order[k] == rep_index_) new_rep = k;
    auto v = view(order[k]);
    sorted.insert(sorted.end(), v.begin(), v.end());
  }
  data_ = std::move(sorted);
  rep_index_ = new_rep;
  rebuild_index();
}

ConjugacyClass conjugacy_class(const PermutationGroup& group, const Permutation& e, std::size_t cap) {
  if (e.degree() != group.degree()) throw DegreeMismatch(e.degree(), group.degree());
  if (!contains(group, e)) throw Error("conjugacy_class: element is not in the group");
  ConjugacyClass cls(group);
  cls.insert(e.images());
  std::vector<point_t> scratch(group.degree());
  for (std::size_t k = 0; k < cls.count_; ++k) {
    for (const auto& g : group.generators()) {
      conjugate_into(g.images(), cls.view(k), scratch);
      cls.insert(scratch);
      if (cls.count_ > cap) throw ClassCapExceeded(cap);
    }
  }
  cls.rep_index_ = 0;
  cls.canonicalize();
  return cls;
}

Permutation conjugation_image(const ConjugacyClass& cls, const Permutation& g) {
  if (g.degree() != cls.degree()) throw DegreeMismatch(g.degree(), cls.degree());
  std::vector<point_t> images(cls.size());
  std::vector<point_t> scratch(cls.degree());
  for (std::size_t i = 0; i < cls.size(); ++i) {
    conjugate_into(g.images(), cls.view(i), scratch);
    auto j = cls.index_of(scratch);
    if (!j) throw Error("conjugation_action: class is not closed under the conjugator");
    images[i] = static_cast<point_t>(*j);
  }
  return Permutation(std::move(images));
}

PermutationGroup conjugation_action(const ConjugacyClass& cls, std::span<const Permutation> conjugators) {
  std::vector<Permutation> gens;
  gens.reserve(conjugators.size());
  for (const auto& g : conjugators) gens.push_back(conjugation_image(cls, g));
  return PermutationGroup(cls.size(), std::move(gens));
}

PermutationGroup conjugation_action(const ConjugacyClass& cls) {
  return conjugation_action(cls, cls.ambient().generators());
}

std::vector<Permutation> centralizer_generators(const ConjugacyClass& cls) {
  return centralizer_generators(cls, conjugation_action(cls));
}

std::vector<Permutation> centralizer_generators(const ConjugacyClass& cls, const PermutationGroup& action_group) {
  const auto& group = cls.ambient();
  const auto gens = group.generators();
  const std::size_t n = cls.degree();
  const BigCount target = group_order(group) / cls.size();
  StabilizerChain centralizer(n);
  if (target == 1) return {};

  const auto action = action_group.generators();
  if (action.size() != gens.size() || action_group.degree() != cls.size()) {
    throw Error("centralizer_generators: action does not match the ambient generators");
  }

  // breadth-first tree over the class; conjugator(x) maps the representative to x
  constexpr std::uint32_t kUnseen = ~std::uint32_t{0};
  std::vector<std::uint32_t> parent(cls.size(), kUnseen);
  std::vector<std::uint32_t> via(cls.size(), 0);
  std::vector<std::uint32_t> queue{static_cast<std::uint32_t>(cls.representative_index())};
  parent[queue.front()] = queue.front();
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (std::uint32_t s = 0; s < gens.size(); ++s) {
      point_t y = action[s](queue[k]);
      if (parent[y] != kUnseen) continue;
      parent[y] = queue[k];
      via[y] = s;
      queue.push_back(y);
    }
  }
  auto conjugator = [&](std::uint32_t x) {
    Permutation u = Permutation::identity(n);
    while (parent[x] != x) {
      u = u * gens[via[x]];
      x = parent[x];
    }
    return u;
  };

  for (std::size_t k = 0; k < queue.size(); ++k) {
    const std::uint32_t x = queue[k];
    Permutation ux;  // computed lazily; most tree edges give trivial generators
    bool have_ux = false;
    for (std::uint32_t s = 0; s < gens.size(); ++s) {
      point_t y = action[s](x);
      if (parent[y] == x && via[y] == s) continue;
      if (!have_ux) {
        ux = conjugator(x);
        have_ux = true;
      }
      Permutation h = conjugator(y).inverse() * gens[s] * ux;
      if (!h.is_identity()) centralizer.extend(h);
      if (centralizer.order() == target) {
        return {centralizer.generators().begin(), centralizer.generators().end()};
      }
    }
  }
  throw Error("centralizer_generators: Schreier generators did not reach the expected order");
}

BigCount generated_order(const ConjugacyClass& cls) {
  const BigCount full = group_order(cls.ambient());
  StabilizerChain chain(cls.degree());
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (chain.order() == full) break;
    chain.extend(cls.element(i));
  }
  return chain.order();
}

}  // namespace qtk
