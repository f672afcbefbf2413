#pragma once

#include <filesystem>
#include <optional>

#include "leib3/bounds.hpp"

namespace leib3 {

/// Outcome of one exhaustive enumeration of all structure tensors of
/// dimension dim over a prime field.
struct EnumerationSummary {
  FieldSpec field;
  std::size_t dim = 0;
  std::uint64_t candidates = 0;        // p^(dim^4), scanned exhaustively
  std::uint64_t valid_count = 0;       // candidates passing the identity check
  std::uint64_t bound_violations = 0;  // expected 0: the bounds are theorems
  std::int64_t min_gap_thm = 0;        // over valid candidates
  std::int64_t min_gap_cor1 = 0;
  std::uint64_t witness_files = 0;     // files written to out_dir

  friend bool operator==(const EnumerationSummary&, const EnumerationSummary&) = default;
};

struct EnumerateOptions {
  std::uint64_t budget = 1ull << 24;
  /// When set, bound-violating candidates and minimal-gap witnesses are
  /// written here in the algebra file format, named by candidate index.
  std::optional<std::filesystem::path> out_dir;
  /// Cap on emitted minimal-gap witness files per bound (ascending candidate
  /// index, so output is deterministic).
  std::size_t max_witness_files = 16;
  /// Cross-check every candidate against brute_force_validate; a mismatch
  /// raises InternalError.
  bool check_oracle = false;
};

/// Materializes candidate `index` of the lexicographic enumeration: the
/// n^4 coefficients c_{ijk}^m, ordered by (i,j,k,m), are the base-p digits
/// of the index, most significant first.
Algebra3 enumeration_candidate(const FieldSpec& f, std::size_t n,
                               std::uint64_t index);

/// Exhaustive scan of all p^(n^4) structure tensors: validates each
/// candidate (fast-fail), folds the bound report of every valid algebra
/// into the summary, and emits witness files. Refuses with
/// BudgetExceededError when p^(n^4) > budget. Parallelized over candidate
/// chunks; chunk results merge in chunk order, so the summary and any
/// emitted files are identical run to run.
EnumerationSummary enumerate_all(const FieldSpec& f, std::size_t n,
                                 const EnumerateOptions& opts = {});

/// Serial reference implementation: one candidate-by-candidate pass.
EnumerationSummary enumerate_all_serial(const FieldSpec& f, std::size_t n,
                                        const EnumerateOptions& opts = {});

/// Independent identity oracle: evaluates both sides of the left Leibniz
/// 3-identity on every basis quintuple by nested calls to the trilinear
/// bracket evaluator. Shares no code with Algebra3::validate's contraction
/// scan; must agree with it on every input.
bool brute_force_validate(const Algebra3& a);

}  // namespace leib3
