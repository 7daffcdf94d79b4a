#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qtk/affine.hpp"
#include "qtk/criteria.hpp"
#include "qtk/hull.hpp"

namespace qtk {

/// One row of a verification run.
struct ClassReport {
  std::string group_name;
  std::size_t n = 0;
  std::string class_rep;
  std::size_t class_size = 0;
  bool generates = false;
  bool power_crit = false;
  bool fix_crit = false;
  bool primitive = false;
  Verdict predicted = Verdict::NotThisDis;
  bool match = false;
  std::int64_t elapsed_ms = 0;

  friend bool operator==(const ClassReport&, const ClassReport&) = default;
};

/// The verdict a row exhibits: NotGenerating, else Primitive/Imprimitive.
Verdict computed_verdict(const ClassReport& row);

struct RunOptions {
  /// Record wall-clock time per row; off gives elapsed_ms = 0 and
  /// byte-identical output across runs.
  bool timing = true;
  /// Worker threads for per-class analyses; results never depend on it.
  unsigned threads = 1;
};

/// A report row plus the evidence behind it.
struct ClassAnalysis {
  ClassReport report;
  std::optional<BlockPartition> witness;  // proper block system when imprimitive
  /// A criterion fired on a generating class that the block engine found primitive.
  bool soundness_violation = false;
  /// The equivalence from a firing criterion's proof failed to check out.
  bool relation_failure = false;
};

/// Class of `rep` in `group` with its conjugation action: generation,
/// both criteria, primitivity. `predicted` is copied into the row; match is
/// computed against it.
ClassAnalysis analyze_class(const std::string& group_name, std::size_t n, const PermutationGroup& group,
                            const Permutation& rep, Verdict predicted, const RunOptions& options = {});

struct SweepResult {
  std::vector<ClassAnalysis> rows;
  /// Classes not materialized because they exceed the class cap.
  std::vector<std::string> skipped;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Every non-identity class of S_n and A_n for n_min <= n <= n_max (both
/// halves of split A_n classes), compared with predicted_verdict.
/// Requires 5 <= n_min <= n_max <= 12.
SweepResult verify_main(std::size_t n_min = 5, std::size_t n_max = 10, const RunOptions& options = {});

/// Every non-identity class of one group (or the one class of `type`).
SweepResult classify(GroupKind kind, std::size_t n, const std::optional<CycleType>& type,
                     const RunOptions& options = {});

struct ExceptionalGroupSummary {
  std::string name;
  std::size_t class_count = 0;  // non-identity classes
  std::size_t involutions = 0;
  std::vector<std::size_t> primitive_generating_sizes;
};

struct ExceptionalResult {
  SweepResult sweep;
  std::vector<ExceptionalGroupSummary> groups;  // S6, PGL(2,9), M10
};

/// All classes of S6, PGL(2,9) and M10, with the signature check: two
/// primitive generating classes of size 15 for S6, one of size 36 for exactly
/// one extension, none for the other.
ExceptionalResult exceptional_a6(const RunOptions& options = {});

struct IsomorphismCheck {
  std::optional<std::vector<point_t>> witness;  // Cjg(S6,(0 1)) -> Cjg(S6,(0 1)(2 3)(4 5))
  bool witness_verified = false;
  bool self_test = false;  // the transposition quandle is isomorphic to itself
  struct SizePair {
    std::size_t n, transpositions, involutions;
  };
  std::vector<SizePair> sizes;  // n in [5,12] where both classes are primitive
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

IsomorphismCheck s6_isomorphism_check();

struct AffineRow {
  std::uint32_t p = 0;
  std::size_t t = 0;
  std::string matrix;  // row-major, comma separated
  bool irreducible = false, simple = false, primitive = false;
  BigCount dis_order = 0, image_order = 0;
  bool ok = false;
};

struct AffineSweepResult {
  std::vector<AffineRow> rows;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Every f on Z_p^t with f and 1 - f invertible. Requires p prime and p^t <= 125.
AffineSweepResult affine_sweep(const std::vector<std::uint32_t>& primes = {2, 3, 5},
                               const std::vector<std::size_t>& dims = {1, 2});

struct HullRow {
  std::string name;
  std::size_t class_size = 0;
  bool primitive = false;
  std::optional<BlockPartition> witness;
  BigCount group_order = 0, generated_order = 0, center_order = 0;
  BigCount stabilizer_order = 0, fixed_order = 0;
  std::uint32_t psi_order = 0;
  bool ok = false;
};

struct HullCheckResult {
  std::vector<HullRow> rows;  // (A5, 2, id), (A5, 2, conj by (0 1))
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

HullCheckResult hull_check();

// Output.
std::vector<std::string> report_columns();
void write_table(std::ostream& out, const std::vector<ClassAnalysis>& rows);
void write_csv(std::ostream& out, const std::vector<ClassAnalysis>& rows);
/// JSON array of rows, keys in column order.
std::string rows_to_json(const std::vector<ClassAnalysis>& rows, int indent = 2);

/// Runs fn(i) for i < count on up to `threads` workers. The first exception
/// is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace qtk
