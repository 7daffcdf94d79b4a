#include "qtk/criteria.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "qtk/detail/union_find.hpp"

namespace qtk {

CycleType::CycleType(std::vector<std::size_t> lengths) : lengths_(std::move(lengths)) {
  for (auto l : lengths_) {
    if (l == 0) throw Error("CycleType: cycle lengths must be positive");
    n_ += l;
  }
  std::sort(lengths_.rbegin(), lengths_.rend());
}

CycleType CycleType::parse(const std::string& text, std::size_t n) {
  std::vector<std::size_t> lengths;
  std::size_t sum = 0;
  const char* p = text.data();
  const char* end = p + text.size();
  while (p < end) {
    std::size_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc{} || v == 0) throw Error("CycleType: cannot parse '" + text + "'");
    lengths.push_back(v);
    sum += v;
    p = next;
    if (p < end) {
      if (*p != ',' || p + 1 == end) throw Error("CycleType: cannot parse '" + text + "'");
      ++p;
    }
  }
  if (n != 0) {
    if (sum > n) throw Error("CycleType: lengths exceed n");
    lengths.insert(lengths.end(), n - sum, 1);
  }
  return CycleType(std::move(lengths));
}

bool CycleType::is_even() const {
  std::size_t even_cycles = std::count_if(lengths_.begin(), lengths_.end(), [](auto l) { return l % 2 == 0; });
  return even_cycles % 2 == 0;
}

std::string CycleType::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < lengths_.size(); ++i) s += (i ? "," : "") + std::to_string(lengths_[i]);
  return s;
}

namespace {

// Positions of the class members among the powers of element i.
std::vector<std::size_t> powers_in_class(const ConjugacyClass& cls, std::size_t i) {
  const Permutation g = cls.element(i);
  std::vector<std::size_t> out;
  Permutation x = g;
  while (!x.is_identity()) {
    if (auto k = cls.index_of(x)) out.push_back(*k);
    x = x * g;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool proper_and_invariant(const BlockPartition& p, const PermutationGroup& action) {
  return !p.is_trivial() && p.is_invariant(action.generators());
}

void check_action_degree(const ConjugacyClass& cls, const PermutationGroup& action) {
  if (action.degree() != cls.size()) throw DegreeMismatch(action.degree(), cls.size());
}

}  // namespace

bool power_criterion(const ConjugacyClass& cls) {
  const std::size_t k = powers_in_class(cls, cls.representative_index()).size();
  return 1 < k && k < cls.size();
}

bool fixed_set_criterion(const ConjugacyClass& cls) {
  const auto fix = cls.representative().fixed_points();
  if (fix.empty()) return false;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (i != cls.representative_index() && cls.element(i).fixed_points() == fix) return true;
  }
  return false;
}

CriterionCheck check_power_criterion(const ConjugacyClass& cls, const PermutationGroup& action) {
  check_action_degree(cls, action);
  CriterionCheck out;
  out.fires = power_criterion(cls);
  if (!out.fires) return out;
  std::vector<std::vector<std::size_t>> powers(cls.size());
  detail::UnionFind uf(cls.size());
  for (std::size_t i = 0; i < cls.size(); ++i) {
    powers[i] = powers_in_class(cls, i);
    for (auto j : powers[i]) uf.unite(static_cast<point_t>(i), static_cast<point_t>(j));
  }
  // symmetry: h a power of g => g a power of h; then the cells are exactly the power sets
  for (std::size_t i = 0; i < cls.size() && out.relation_valid; ++i) {
    for (auto j : powers[i]) {
      if (!std::binary_search(powers[j].begin(), powers[j].end(), i)) {
        out.relation_valid = false;
        break;
      }
    }
    if (uf.class_size(static_cast<point_t>(i)) != powers[i].size()) out.relation_valid = false;
  }
  out.relation = BlockPartition(uf.classes());
  out.relation_valid = out.relation_valid && proper_and_invariant(*out.relation, action);
  return out;
}

CriterionCheck check_fixed_set_criterion(const ConjugacyClass& cls, const PermutationGroup& action) {
  check_action_degree(cls, action);
  CriterionCheck out;
  out.fires = fixed_set_criterion(cls);
  if (!out.fires) return out;
  std::map<std::vector<point_t>, std::vector<point_t>> cells;
  for (std::size_t i = 0; i < cls.size(); ++i) cells[cls.element(i).fixed_points()].push_back(static_cast<point_t>(i));
  std::vector<std::vector<point_t>> blocks;
  for (auto& [fix, members] : cells) blocks.push_back(std::move(members));
  out.relation = BlockPartition(std::move(blocks));
  out.relation_valid = proper_and_invariant(*out.relation, action);
  return out;
}

bool splits_in_alternating(const CycleType& ct) {
  if (!ct.is_even()) throw Error("splits_in_alternating: type " + ct.to_string() + " is odd");
  const auto& l = ct.lengths();
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] % 2 == 0) return false;
    if (i > 0 && l[i] == l[i - 1]) return false;
  }
  return true;
}

std::string to_string(GroupKind kind) { return kind == GroupKind::Sym ? "sym" : "alt"; }

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Primitive: return "primitive";
    case Verdict::Imprimitive: return "imprimitive";
    case Verdict::NotGenerating: return "not-generating";
    case Verdict::NotThisDis: return "not-this-dis";
  }
  return "?";
}

Verdict predicted_verdict(GroupKind kind, std::size_t n, const CycleType& ct) {
  if (n < 5) throw Error("predicted_verdict: n must be at least 5");
  if (ct.n() != n) throw Error("predicted_verdict: type " + ct.to_string() + " does not have size " + std::to_string(n));
  if (kind == GroupKind::Alt && !ct.is_even()) throw Error("predicted_verdict: odd type in the alternating group");
  if (ct.is_identity()) return Verdict::NotThisDis;

  const auto& l = ct.lengths();
  const bool transposition = l[0] == 2 && (l.size() == 1 || l[1] == 1);
  const bool fpf_involution = std::all_of(l.begin(), l.end(), [](auto x) { return x == 2; });

  if (kind == GroupKind::Sym) {
    if (ct.is_even()) return Verdict::NotGenerating;  // the class generates A_n
    if (transposition) return Verdict::Primitive;
    if (fpf_involution && n % 4 == 2) return Verdict::Primitive;
    return Verdict::Imprimitive;
  }
  if (fpf_involution && n % 4 == 0 && n >= 12) return Verdict::Primitive;
  return Verdict::Imprimitive;
}

}  // namespace qtk
