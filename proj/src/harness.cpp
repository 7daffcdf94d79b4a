#include "qtk/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

#include "json.hpp"
#include "qtk/classical_groups.hpp"
#include "qtk/constructions.hpp"
#include "qtk/projective.hpp"

namespace qtk {

Verdict computed_verdict(const ClassReport& row) {
  if (!row.generates) return Verdict::NotGenerating;
  return row.primitive ? Verdict::Primitive : Verdict::Imprimitive;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < std::min<std::size_t>(threads, count); ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

namespace {

void finalize_match(ClassAnalysis& a) { a.report.match = a.report.predicted == computed_verdict(a.report); }

struct Job {
  std::string group_name;
  std::size_t n;
  const PermutationGroup* group;
  Permutation rep;
  Verdict predicted;
};

void collect_failures(SweepResult& result) {
  for (const auto& a : result.rows) {
    const auto& r = a.report;
    const std::string where = r.group_name + " " + r.class_rep;
    if (!r.match) {
      result.failures.push_back(where + ": predicted " + to_string(r.predicted) + ", computed " +
                                to_string(computed_verdict(r)));
    }
    if (a.soundness_violation) result.failures.push_back(where + ": criterion fired on a primitive class");
    if (a.relation_failure) result.failures.push_back(where + ": criterion relation is not a proper block system");
  }
}

SweepResult run_jobs(const std::vector<Job>& jobs, const RunOptions& options) {
  SweepResult result;
  result.rows.resize(jobs.size());
  parallel_for(jobs.size(), options.threads, [&](std::size_t i) {
    const Job& j = jobs[i];
    result.rows[i] = analyze_class(j.group_name, j.n, *j.group, j.rep, j.predicted, options);
  });
  collect_failures(result);
  return result;
}

// Jobs for every non-identity class of S_n or A_n (or only `only`).
void add_group_jobs(std::vector<Job>& jobs, std::vector<std::string>& skipped, GroupKind kind, std::size_t n,
                    const PermutationGroup& group, const std::optional<CycleType>& only) {
  const std::string name = (kind == GroupKind::Sym ? "S" : "A") + std::to_string(n);
  for (const auto& lengths : integer_partitions(n)) {
    const CycleType ct(lengths);
    if (ct.is_identity()) continue;
    if (kind == GroupKind::Alt && !ct.is_even()) continue;
    if (only && ct != *only) continue;
    const bool split = kind == GroupKind::Alt && splits_in_alternating(ct);
    const BigCount size = symmetric_class_size(lengths) / (split ? 2 : 1);
    const Permutation rep = cycle_type_representative(n, lengths);
    if (size > kClassCap) {
      skipped.push_back(name + " " + rep.to_cycle_string() + " (class size " + to_string(size) + ")");
      continue;
    }
    const Verdict predicted = predicted_verdict(kind, n, ct);
    jobs.push_back({name, n, &group, rep, predicted});
    if (split) {
      // the other half: conjugate by an odd permutation
      const Permutation t = Permutation::from_cycles(n, {{0, 1}});
      jobs.push_back({name, n, &group, conjugate(t, rep), predicted});
    }
  }
}

}  // namespace

ClassAnalysis analyze_class(const std::string& group_name, std::size_t n, const PermutationGroup& group,
                            const Permutation& rep, Verdict predicted, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ClassAnalysis out;
  ClassReport& r = out.report;
  r.group_name = group_name;
  r.n = n;
  r.class_rep = rep.to_cycle_string();
  r.predicted = predicted;

  const ConjugacyClass cls = conjugacy_class(group, rep);
  r.class_size = cls.size();
  const PermutationGroup action = conjugation_action(cls);
  r.generates = generated_order(cls) == group_order(group);

  std::vector<Permutation> hint;
  for (const auto& c : centralizer_generators(cls, action)) hint.push_back(conjugation_image(cls, c));
  PrimitivityVerdict verdict =
      is_primitive(action, hint, static_cast<point_t>(cls.representative_index()));
  r.primitive = verdict.primitive;
  out.witness = std::move(verdict.witness);

  const CriterionCheck power = check_power_criterion(cls, action);
  const CriterionCheck fix = check_fixed_set_criterion(cls, action);
  r.power_crit = power.fires;
  r.fix_crit = fix.fires;
  out.soundness_violation = (power.fires || fix.fires) && r.primitive;
  out.relation_failure = !power.relation_valid || !fix.relation_valid;

  finalize_match(out);
  if (options.timing) {
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                       .count();
  }
  return out;
}

SweepResult verify_main(std::size_t n_min, std::size_t n_max, const RunOptions& options) {
  if (n_min < 5 || n_min > n_max || n_max > 12) throw Error("verify_main: need 5 <= n_min <= n_max <= 12");
  std::vector<PermutationGroup> groups;
  groups.reserve(2 * (n_max - n_min + 1));
  for (std::size_t n = n_min; n <= n_max; ++n) {
    groups.push_back(symmetric_group(n));
    groups.push_back(alternating_group(n));
  }
  std::vector<Job> jobs;
  std::vector<std::string> skipped;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    const std::size_t k = 2 * (n - n_min);
    add_group_jobs(jobs, skipped, GroupKind::Sym, n, groups[k], std::nullopt);
    add_group_jobs(jobs, skipped, GroupKind::Alt, n, groups[k + 1], std::nullopt);
  }
  SweepResult result = run_jobs(jobs, options);
  result.skipped = std::move(skipped);
  return result;
}

SweepResult classify(GroupKind kind, std::size_t n, const std::optional<CycleType>& type, const RunOptions& options) {
  if (n < 5) throw Error("classify: n must be at least 5");
  if (type && type->n() != n) throw Error("classify: cycle type " + type->to_string() + " does not sum to n");
  if (type && kind == GroupKind::Alt && !type->is_even()) throw Error("classify: odd cycle type in A_n");
  if (type && type->is_identity()) throw Error("classify: the identity class is not a quandle of interest");
  const PermutationGroup group = kind == GroupKind::Sym ? symmetric_group(n) : alternating_group(n);
  std::vector<Job> jobs;
  std::vector<std::string> skipped;
  add_group_jobs(jobs, skipped, kind, n, group, type);
  SweepResult result = run_jobs(jobs, options);
  result.skipped = std::move(skipped);
  return result;
}

ExceptionalResult exceptional_a6(const RunOptions& options) {
  struct Named {
    std::string name;
    PermutationGroup group;
  };
  const std::vector<Named> groups{{"S6", symmetric_group(6)}, {"PGL(2,9)", pgl2_9()}, {"M10", m10()}};

  std::vector<Job> jobs;
  std::vector<std::size_t> owner;
  ExceptionalResult out;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto& G = groups[gi].group;
    ExceptionalGroupSummary summary;
    summary.name = groups[gi].name;
    // all 720 elements, partitioned into classes; each class is seeded by its smallest member
    const auto elements = enumerate_elements(G);
    std::set<Permutation> seen;
    for (const auto& x : elements) {
      summary.involutions += x.order() == 2;
      if (x.is_identity() || seen.count(x)) continue;
      const ConjugacyClass cls = conjugacy_class(G, x);
      for (std::size_t i = 0; i < cls.size(); ++i) seen.insert(cls.element(i));
      ++summary.class_count;
      const Verdict predicted = gi == 0 ? predicted_verdict(GroupKind::Sym, 6, CycleType::of(x)) : Verdict::NotThisDis;
      jobs.push_back({groups[gi].name, G.degree(), &G, x, predicted});
      owner.push_back(gi);
    }
    out.groups.push_back(std::move(summary));
  }

  SweepResult& sweep = out.sweep;
  sweep.rows.resize(jobs.size());
  parallel_for(jobs.size(), options.threads, [&](std::size_t i) {
    const Job& j = jobs[i];
    sweep.rows[i] = analyze_class(j.group_name, j.n, *j.group, j.rep, j.predicted, options);
  });
  for (std::size_t i = 0; i < sweep.rows.size(); ++i) {
    auto& a = sweep.rows[i];
    if (owner[i] != 0) {
      // in the two extensions the only primitive generating class has 36 elements
      const auto& r = a.report;
      a.report.predicted = !r.generates ? Verdict::NotGenerating
                           : r.class_size == 36 ? Verdict::Primitive
                                                : Verdict::Imprimitive;
      finalize_match(a);
    }
    if (a.report.generates && a.report.primitive) {
      out.groups[owner[i]].primitive_generating_sizes.push_back(a.report.class_size);
    }
  }
  collect_failures(sweep);

  const auto& s6 = out.groups[0].primitive_generating_sizes;
  if (s6 != std::vector<std::size_t>{15, 15}) {
    sweep.failures.push_back("S6: expected exactly two primitive generating classes of size 15");
  }
  const auto& a = out.groups[1].primitive_generating_sizes;
  const auto& b = out.groups[2].primitive_generating_sizes;
  const std::vector<std::size_t> one36{36};
  if (!((a == one36 && b.empty()) || (b == one36 && a.empty()))) {
    sweep.failures.push_back(
        "extensions: expected one group with a single primitive generating class of size 36 and one with none");
  }
  return out;
}

IsomorphismCheck s6_isomorphism_check() {
  IsomorphismCheck out;
  const PermutationGroup S6 = symmetric_group(6);
  const FiniteQuandle q1 = conjugation_quandle(conjugacy_class(S6, Permutation::from_cycles(6, {{0, 1}})));
  const FiniteQuandle q2 =
      conjugation_quandle(conjugacy_class(S6, Permutation::from_cycles(6, {{0, 1}, {2, 3}, {4, 5}})));
  out.witness = are_isomorphic(q1, q2);
  if (out.witness) {
    const auto& f = *out.witness;
    std::vector<point_t> sorted = f;
    std::sort(sorted.begin(), sorted.end());
    out.witness_verified = f.size() == q1.size() && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    for (point_t a = 0; a < q1.size() && out.witness_verified; ++a) {
      for (point_t b = 0; b < q1.size(); ++b) {
        if (f[q1(a, b)] != q2(f[a], f[b])) {
          out.witness_verified = false;
          break;
        }
      }
    }
  }
  if (!out.witness) out.failures.push_back("no isomorphism between the two 15-element S6 quandles");
  if (out.witness && !out.witness_verified) out.failures.push_back("isomorphism witness fails verification");
  out.self_test = are_isomorphic(q1, q1).has_value();
  if (!out.self_test) out.failures.push_back("transposition quandle not isomorphic to itself");

  for (std::size_t n = 5; n <= 12; ++n) {
    if (n % 2) continue;
    const CycleType transposition = CycleType::parse("2", n);
    const CycleType involution(std::vector<std::size_t>(n / 2, 2));
    if (predicted_verdict(GroupKind::Sym, n, transposition) != Verdict::Primitive ||
        predicted_verdict(GroupKind::Sym, n, involution) != Verdict::Primitive) {
      continue;
    }
    const auto a = static_cast<std::size_t>(symmetric_class_size(transposition.lengths()));
    const auto b = static_cast<std::size_t>(symmetric_class_size(involution.lengths()));
    out.sizes.push_back({n, a, b});
    if ((n == 6) != (a == b)) {
      out.failures.push_back("n=" + std::to_string(n) + ": class sizes " + std::to_string(a) + " and " +
                             std::to_string(b) + " contradict 'equal only for n = 6'");
    }
  }
  return out;
}

AffineSweepResult affine_sweep(const std::vector<std::uint32_t>& primes, const std::vector<std::size_t>& dims) {
  for (auto p : primes) {
    for (auto t : dims) {
      std::size_t size = 1;
      for (std::size_t i = 0; i < t; ++i) size *= p;
      if (t == 0 || size > 125) {
        throw Error("affine_sweep: p^t must be at most 125 (p=" + std::to_string(p) + ", t=" + std::to_string(t) + ")");
      }
    }
  }
  AffineSweepResult out;
  for (auto p : primes) {
    for (auto t : dims) {
      for (const auto& f : all_linear_maps(p, t)) {
        if (!f.is_invertible()) continue;
        const LinearMap g = f.one_minus();
        if (!g.is_invertible()) continue;
        const FiniteQuandle q = affine_quandle(f);
        AffineRow row;
        row.p = p;
        row.t = t;
        for (std::size_t i = 0; i < t * t; ++i) row.matrix += (i ? "," : "") + std::to_string(f.at(i / t, i % t));
        row.irreducible = is_irreducible(f);
        row.simple = is_simple(q);
        row.primitive = is_primitive_quandle(q).primitive;
        row.dis_order = group_order(dis(q));
        row.image_order = 1;
        for (std::size_t i = 0; i < g.rank(); ++i) row.image_order *= p;
        row.ok = row.primitive == row.simple && row.simple == row.irreducible && row.dis_order == row.image_order;
        if (!row.ok) {
          out.failures.push_back("p=" + std::to_string(p) + " t=" + std::to_string(t) + " f=[" + row.matrix + "]");
        }
        out.rows.push_back(std::move(row));
      }
    }
  }
  return out;
}

HullCheckResult hull_check() {
  HullCheckResult out;
  const PermutationGroup A5 = alternating_group(5);
  struct Case {
    std::string name;
    Permutation conjugator;
    bool expect_primitive;
  };
  const std::vector<Case> cases{{"A5 t=2 phi=id", Permutation::identity(5), true},
                                {"A5 t=2 phi=conj(1,2)", Permutation::from_cycles(5, {{0, 1}}), false}};
  for (const auto& c : cases) {
    const HullReport h = hull(A5, 2, c.conjugator);
    HullRow row;
    row.name = c.name;
    row.class_size = h.class_elements.size();
    row.primitive = h.primitivity.primitive;
    row.witness = h.primitivity.witness;
    row.group_order = h.group_order;
    row.generated_order = h.generated_order;
    row.center_order = h.center_order;
    row.stabilizer_order = h.stabilizer_order;
    row.fixed_order = h.fixed_order;
    row.psi_order = HullGroup(A5, 2, c.conjugator).psi_order();

    const bool identity = row.stabilizer_order == row.fixed_order * row.psi_order && h.stabilizer_contains_psi;
    const bool generated = row.generated_order == row.group_order;
    bool verdict = row.primitive == c.expect_primitive;
    if (!row.primitive) {
      verdict = verdict && row.witness && !row.witness->is_trivial() && row.witness->is_invariant(h.action.generators());
    }
    row.ok = identity && generated && verdict;
    if (!identity) out.failures.push_back(c.name + ": stabilizer order differs from |fix(phi)| * ord(psi)");
    if (!generated) out.failures.push_back(c.name + ": the class does not generate the group");
    if (!verdict) out.failures.push_back(c.name + ": unexpected primitivity verdict or witness");
    out.rows.push_back(std::move(row));
  }
  if (out.rows[0].class_size != 60) out.failures.push_back("A5 t=2 phi=id: class size is not 60");
  return out;
}

std::vector<std::string> report_columns() {
  return {"group_name", "n",         "class_rep", "class_size", "generates", "power_crit",
          "fix_crit",   "primitive", "predicted", "match",      "elapsed_ms"};
}

namespace {

std::vector<std::string> cells(const ClassReport& r) {
  auto b = [](bool x) { return std::string(x ? "true" : "false"); };
  return {r.group_name, std::to_string(r.n), r.class_rep,     std::to_string(r.class_size),
          b(r.generates), b(r.power_crit),   b(r.fix_crit),   b(r.primitive),
          to_string(r.predicted), b(r.match), std::to_string(r.elapsed_ms)};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

void write_table(std::ostream& out, const std::vector<ClassAnalysis>& rows) {
  const auto header = report_columns();
  std::vector<std::vector<std::string>> table{header};
  for (const auto& a : rows) table.push_back(cells(a.report));
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : table) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  for (const auto& line : table) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      out << std::left << std::setw(static_cast<int>(width[i])) << line[i] << (i + 1 < line.size() ? "  " : "\n");
    }
  }
}

void write_csv(std::ostream& out, const std::vector<ClassAnalysis>& rows) {
  const auto header = report_columns();
  for (std::size_t i = 0; i < header.size(); ++i) out << header[i] << (i + 1 < header.size() ? "," : "\n");
  for (const auto& a : rows) {
    const auto line = cells(a.report);
    for (std::size_t i = 0; i < line.size(); ++i) out << csv_escape(line[i]) << (i + 1 < line.size() ? "," : "\n");
  }
}

std::string rows_to_json(const std::vector<ClassAnalysis>& rows, int indent) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& a : rows) {
    const auto& r = a.report;
    nlohmann::ordered_json j;
    j["group_name"] = r.group_name;
    j["n"] = r.n;
    j["class_rep"] = r.class_rep;
    j["class_size"] = r.class_size;
    j["generates"] = r.generates;
    j["power_crit"] = r.power_crit;
    j["fix_crit"] = r.fix_crit;
    j["primitive"] = r.primitive;
    j["predicted"] = to_string(r.predicted);
    j["match"] = r.match;
    j["elapsed_ms"] = r.elapsed_ms;
    doc.push_back(std::move(j));
  }
  return doc.dump(indent);
}

}  // namespace qtk
