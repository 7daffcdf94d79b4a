// Command-line front end for the verification harness.
// Exit codes: 0 all checks passed, 1 mismatch, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qtk/harness.hpp"

namespace {

using namespace qtk;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ReportFlags {
  std::string json_path, csv_path;
  bool no_timing = false;
  unsigned threads = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--json", json_path, "Write rows as JSON");
    cmd->add_option("--csv", csv_path, "Write rows as CSV");
    cmd->add_flag("--no-timing", no_timing, "Write elapsed_ms = 0 for reproducible output");
    cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 64u));
  }
  RunOptions options() const { return {!no_timing, threads}; }
};

void write_files(const ReportFlags& flags, const std::vector<ClassAnalysis>& rows) {
  if (!flags.json_path.empty()) {
    std::ofstream out(flags.json_path);
    if (!out) throw UsageError("cannot write " + flags.json_path);
    out << rows_to_json(rows) << "\n";
  }
  if (!flags.csv_path.empty()) {
    std::ofstream out(flags.csv_path);
    if (!out) throw UsageError("cannot write " + flags.csv_path);
    write_csv(out, rows);
  }
}

int finish(const std::vector<std::string>& failures) {
  if (failures.empty()) {
    std::cout << "OK\n";
    return 0;
  }
  for (const auto& f : failures) std::cout << "MISMATCH " << f << "\n";
  return 1;
}

int report_sweep(const SweepResult& result, const ReportFlags& flags) {
  write_table(std::cout, result.rows);
  write_files(flags, result.rows);
  std::cout << "\n" << result.rows.size() << " classes checked";
  if (!result.skipped.empty()) std::cout << ", " << result.skipped.size() << " skipped above the class cap";
  std::cout << "\n";
  for (const auto& s : result.skipped) std::cout << "skipped " << s << "\n";
  return finish(result.failures);
}

template <class T>
std::vector<T> parse_list(const std::string& text) {
  std::vector<T> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<T>(v));
    } catch (const std::logic_error&) {
      throw UsageError("not a list of integers: '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

bool prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void print_verdict_line(const std::string& what, bool value) { std::cout << "  " << what << ": " << (value ? "yes" : "no") << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quandle and permutation-group verification toolkit"};
  app.require_subcommand(1);

  // verify-main
  auto* verify = app.add_subcommand("verify-main", "Classify every class of S_n and A_n");
  std::size_t n_min = 5, n_max = 0;
  bool deep = false;
  ReportFlags verify_flags;
  verify->add_option("--n-min", n_min, "Smallest n (>= 5)");
  verify->add_option("--n-max", n_max, "Largest n (default 10, or 12 with --deep)");
  verify->add_flag("--deep", deep, "Extend the default range to n = 12");
  verify_flags.attach(verify);

  auto* exceptional = app.add_subcommand("exceptional-a6", "Classes of S6, PGL(2,9) and M10");
  ReportFlags exceptional_flags;
  exceptional_flags.attach(exceptional);

  auto* iso = app.add_subcommand("s6-iso", "Isomorphism of the two 15-element S6 quandles");

  auto* affine = app.add_subcommand("affine-sweep", "Affine quandles over Z_p^t");
  std::string primes_text = "2,3,5", dims_text = "1,2";
  bool affine_verbose = false;
  affine->add_option("--p", primes_text, "Comma-separated primes");
  affine->add_option("--t", dims_text, "Comma-separated dimensions");
  affine->add_flag("--verbose", affine_verbose, "Print every matrix");

  auto* single_affine = app.add_subcommand("affine", "Properties of one affine quandle");
  std::uint32_t single_p = 0;
  std::size_t single_t = 0;
  std::string matrix_text;
  single_affine->add_option("--p", single_p, "Prime")->required();
  single_affine->add_option("--t", single_t, "Dimension")->required();
  single_affine->add_option("--matrix", matrix_text, "Row-major entries, comma-separated")->required();

  auto* hull_cmd = app.add_subcommand("hull-check", "Hulls of A5 with t = 2");

  auto* classify_cmd = app.add_subcommand("classify", "Classify classes of one group");
  std::string group_text, type_text;
  std::size_t classify_n = 0;
  ReportFlags classify_flags;
  classify_cmd->add_option("--group", group_text, "sym or alt")->required()->check(CLI::IsMember({"sym", "alt"}));
  classify_cmd->add_option("--n", classify_n, "Degree")->required();
  classify_cmd->add_option("--cycle-type", type_text, "Cycle lengths, e.g. 2,2,1 (1-cycles optional)");
  classify_flags.attach(classify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) {
      if (n_max == 0) n_max = deep ? 12 : 10;
      if (n_min < 5 || n_min > n_max || n_max > 12) throw UsageError("need 5 <= n-min <= n-max <= 12");
      return report_sweep(verify_main(n_min, n_max, verify_flags.options()), verify_flags);
    }
    if (*exceptional) {
      const ExceptionalResult result = exceptional_a6(exceptional_flags.options());
      write_table(std::cout, result.sweep.rows);
      write_files(exceptional_flags, result.sweep.rows);
      std::cout << "\n";
      for (const auto& g : result.groups) {
        std::cout << g.name << ": " << g.class_count << " non-identity classes, " << g.involutions
                  << " involutions, primitive generating classes of size [";
        for (std::size_t i = 0; i < g.primitive_generating_sizes.size(); ++i) {
          std::cout << (i ? "," : "") << g.primitive_generating_sizes[i];
        }
        std::cout << "]\n";
      }
      return finish(result.sweep.failures);
    }
    if (*iso) {
      const IsomorphismCheck result = s6_isomorphism_check();
      if (result.witness) {
        std::cout << "witness Cjg(S6,(1,2)) -> Cjg(S6,(1,2)(3,4)(5,6)), by class position:";
        for (auto x : *result.witness) std::cout << " " << x;
        std::cout << "\nverified: " << (result.witness_verified ? "yes" : "no") << "\n";
      }
      for (const auto& s : result.sizes) {
        std::cout << "n=" << s.n << ": transpositions " << s.transpositions << ", fixed-point-free involutions "
                  << s.involutions << "\n";
      }
      return finish(result.failures);
    }
    if (*affine) {
      const auto primes = parse_list<std::uint32_t>(primes_text);
      const auto dims = parse_list<std::size_t>(dims_text);
      for (auto p : primes) {
        if (!prime(p)) throw UsageError(std::to_string(p) + " is not prime");
        for (auto t : dims) {
          std::uint64_t size = 1;
          for (std::size_t i = 0; i < t && size <= 125; ++i) size *= p;
          if (t == 0 || size > 125) throw UsageError("p^t must be at most 125");
        }
      }
      const AffineSweepResult result = affine_sweep(primes, dims);
      std::size_t irreducible = 0;
      for (const auto& r : result.rows) {
        irreducible += r.irreducible;
        if (affine_verbose) {
          std::cout << "p=" << r.p << " t=" << r.t << " f=[" << r.matrix << "] irreducible=" << r.irreducible
                    << " simple=" << r.simple << " primitive=" << r.primitive << " |Dis|=" << to_string(r.dis_order)
                    << " |Im(1-f)|=" << to_string(r.image_order) << (r.ok ? "" : "  <-- counterexample") << "\n";
        }
      }
      std::cout << result.rows.size() << " maps with f and 1-f invertible, " << irreducible << " irreducible\n";
      return finish(result.failures);
    }
    if (*single_affine) {
      if (!prime(single_p)) throw UsageError(std::to_string(single_p) + " is not prime");
      const auto entries = parse_list<std::uint32_t>(matrix_text);
      if (entries.size() != single_t * single_t) throw UsageError("matrix needs t*t entries");
      for (auto e : entries) {
        if (e >= single_p) throw UsageError("matrix entries must be below p");
      }
      const LinearMap f(single_p, single_t, entries);
      if (!f.is_invertible()) throw UsageError("f is singular");
      const FiniteQuandle q = affine_quandle(f);
      std::cout << "Aff(Z_" << single_p << "^" << single_t << ", f), " << q.size() << " elements\n";
      print_verdict_line("1-f invertible", f.one_minus().is_invertible());
      print_verdict_line("irreducible", is_irreducible(f));
      print_verdict_line("connected", is_connected(q));
      print_verdict_line("faithful", is_faithful(q));
      print_verdict_line("simple", is_simple(q));
      print_verdict_line("primitive", is_primitive_quandle(q).primitive);
      std::cout << "  |Dis|: " << to_string(group_order(dis(q))) << "\n";
      return 0;
    }
    if (*hull_cmd) {
      const HullCheckResult result = hull_check();
      for (const auto& r : result.rows) {
        std::cout << r.name << ": class " << r.class_size << ", " << (r.primitive ? "primitive" : "imprimitive");
        if (r.witness) std::cout << " (blocks " << r.witness->block_count() << " x " << r.witness->block_size() << ")";
        std::cout << ", |G| " << to_string(r.group_order) << ", |<class>| " << to_string(r.generated_order)
                  << ", |Z| " << to_string(r.center_order) << ", stabilizer " << to_string(r.stabilizer_order)
                  << " = |fix(phi)| " << to_string(r.fixed_order) << " * ord(psi) " << r.psi_order << "\n";
      }
      return finish(result.failures);
    }
    if (*classify_cmd) {
      if (classify_n < 5 || classify_n > 12) throw UsageError("--n must be between 5 and 12");
      const GroupKind kind = group_text == "sym" ? GroupKind::Sym : GroupKind::Alt;
      std::optional<CycleType> type;
      if (!type_text.empty()) {
        try {
          type = CycleType::parse(type_text, classify_n);
        } catch (const Error& e) {
          throw UsageError(e.what());
        }
        if (type->n() != classify_n) throw UsageError("cycle type does not sum to n");
        if (kind == GroupKind::Alt && !type->is_even()) throw UsageError("odd cycle type in A_n");
        if (type->is_identity()) throw UsageError("the identity class is excluded");
      }
      return report_sweep(classify(kind, classify_n, type, classify_flags.options()), classify_flags);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
