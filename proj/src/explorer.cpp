#include "leib3/explorer.hpp"

#include <algorithm>
#include <limits>

#include "leib3/io.hpp"

namespace leib3 {

namespace {

constexpr std::int64_t kNoGap = std::numeric_limits<std::int64_t>::max();

// p^(n^4) exactly; the result may not fit 64 bits, hence mpz.
mpz_class candidate_count(std::uint32_t p, std::size_t n) {
  mpz_class total;
  const std::uint64_t exponent = std::uint64_t(n) * n * n * n;
  mpz_ui_pow_ui(total.get_mpz_t(), p, exponent);
  return total;
}

struct ChunkStats {
  std::uint64_t valid = 0;
  std::uint64_t violations = 0;
  std::uint64_t oracle_mismatches = 0;
  std::int64_t min_gap_thm = kNoGap;
  std::int64_t min_gap_cor1 = kNoGap;
  std::vector<std::uint64_t> thm_witnesses;   // indices attaining min_gap_thm
  std::vector<std::uint64_t> cor1_witnesses;  // indices attaining min_gap_cor1
  std::vector<std::uint64_t> violating;       // indices with a failed bound
};

void fold_gap(std::int64_t gap, std::uint64_t index, std::int64_t& min_gap,
              std::vector<std::uint64_t>& witnesses, std::size_t cap) {
  if (gap < min_gap) {
    min_gap = gap;
    witnesses.clear();
  }
  if (gap == min_gap && witnesses.size() < cap) witnesses.push_back(index);
}

void merge_gap(const std::int64_t gap, const std::vector<std::uint64_t>& indices,
               std::int64_t& min_gap, std::vector<std::uint64_t>& witnesses,
               std::size_t cap) {
  if (gap > min_gap) return;
  if (gap < min_gap) {
    min_gap = gap;
    witnesses.clear();
  }
  for (std::uint64_t idx : indices)
    if (witnesses.size() < cap) witnesses.push_back(idx);
}

// Scans candidates [begin, end); indices ascend, so witness lists ascend.
ChunkStats scan_chunk(const FieldSpec& f, std::size_t n, std::uint64_t begin,
                      std::uint64_t end, const EnumerateOptions& opts) {
  ChunkStats stats;
  for (std::uint64_t index = begin; index < end; ++index) {
    Algebra3 candidate = enumeration_candidate(f, n, index);
    const bool valid = !candidate.has_defect_fast();
    if (opts.check_oracle && brute_force_validate(candidate) != valid)
      ++stats.oracle_mismatches;
    if (!valid) continue;

    ++stats.valid;
    const BoundReport rep = schur_report(candidate);
    const TightnessGap gap = tightness_gap(rep);
    if (!rep.holds_thm || !rep.holds_cor1 ||
        (rep.holds_cor2 && !*rep.holds_cor2)) {
      ++stats.violations;
      stats.violating.push_back(index);
    }
    fold_gap(gap.gap_thm, index, stats.min_gap_thm, stats.thm_witnesses,
             opts.max_witness_files);
    fold_gap(gap.gap_cor1, index, stats.min_gap_cor1, stats.cor1_witnesses,
             opts.max_witness_files);
  }
  return stats;
}

EnumerationSummary finalize(const FieldSpec& f, std::size_t n, std::uint64_t total,
                            const std::vector<ChunkStats>& parts,
                            const EnumerateOptions& opts) {
  ChunkStats merged;
  for (const ChunkStats& part : parts) {
    merged.valid += part.valid;
    merged.violations += part.violations;
    merged.oracle_mismatches += part.oracle_mismatches;
    merge_gap(part.min_gap_thm, part.thm_witnesses, merged.min_gap_thm,
              merged.thm_witnesses, opts.max_witness_files);
    merge_gap(part.min_gap_cor1, part.cor1_witnesses, merged.min_gap_cor1,
              merged.cor1_witnesses, opts.max_witness_files);
    merged.violating.insert(merged.violating.end(), part.violating.begin(),
                            part.violating.end());
  }
  if (merged.oracle_mismatches != 0)
    throw InternalError("identity check and brute-force oracle disagree on " +
                        std::to_string(merged.oracle_mismatches) + " candidates");

  EnumerationSummary summary;
  summary.field = f;
  summary.dim = n;
  summary.candidates = total;
  summary.valid_count = merged.valid;
  summary.bound_violations = merged.violations;
  summary.min_gap_thm = merged.min_gap_thm == kNoGap ? 0 : merged.min_gap_thm;
  summary.min_gap_cor1 = merged.min_gap_cor1 == kNoGap ? 0 : merged.min_gap_cor1;

  if (opts.out_dir) {
    std::filesystem::create_directories(*opts.out_dir);
    std::vector<std::uint64_t> to_emit = merged.violating;
    to_emit.insert(to_emit.end(), merged.thm_witnesses.begin(),
                   merged.thm_witnesses.end());
    to_emit.insert(to_emit.end(), merged.cor1_witnesses.begin(),
                   merged.cor1_witnesses.end());
    std::sort(to_emit.begin(), to_emit.end());
    to_emit.erase(std::unique(to_emit.begin(), to_emit.end()), to_emit.end());
    for (std::uint64_t index : to_emit) {
      Algebra3 witness = enumeration_candidate(f, n, index);
      write_algebra_file(*opts.out_dir / ("cand-" + std::to_string(index) + ".json"),
                         witness);
    }
    summary.witness_files = to_emit.size();
  }
  return summary;
}

std::uint64_t checked_total(const FieldSpec& f, std::size_t n,
                            const EnumerateOptions& opts) {
  if (!f.is_prime_field())
    throw UsageError("enumeration requires a prime field, got " + f.str());
  const mpz_class total = candidate_count(f.p, n);
  if (total > opts.budget)
    throw BudgetExceededError(
        "enumeration over " + f.str() + " at dim " + std::to_string(n) +
            " needs " + total.get_str() + " candidates, over the budget of " +
            std::to_string(opts.budget),
        total.get_str());
  return total.get_ui();
}

}  // namespace

Algebra3 enumeration_candidate(const FieldSpec& f, std::size_t n,
                               std::uint64_t index) {
  if (!f.is_prime_field())
    throw UsageError("enumeration requires a prime field, got " + f.str());
  const std::uint64_t coeffs = std::uint64_t(n) * n * n * n;
  StructureTensor tensor(f, n);
  // digits of the index in base p, coefficient (i,j,k,m) lexicographic with
  // the (0,0,0,0) digit most significant
  std::vector<std::uint32_t> digit(coeffs, 0);
  for (std::uint64_t t = coeffs; t-- > 0;) {
    digit[t] = static_cast<std::uint32_t>(index % f.p);
    index /= f.p;
  }
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec value = zero_vec(f, n);
        bool nonzero = false;
        for (std::size_t m = 0; m < n; ++m, ++t) {
          if (digit[t] == 0) continue;
          value[m] = Scalar::residue(f, digit[t]);
          nonzero = true;
        }
        if (nonzero) tensor.set(i, j, k, std::move(value));
      }
  return Algebra3(std::move(tensor));
}

EnumerationSummary enumerate_all_serial(const FieldSpec& f, std::size_t n,
                                        const EnumerateOptions& opts) {
  const std::uint64_t total = checked_total(f, n, opts);
  std::vector<ChunkStats> parts;
  parts.push_back(scan_chunk(f, n, 0, total, opts));
  return finalize(f, n, total, parts, opts);
}

EnumerationSummary enumerate_all(const FieldSpec& f, std::size_t n,
                                 const EnumerateOptions& opts) {
  const std::uint64_t total = checked_total(f, n, opts);
#ifdef _OPENMP
  if (total >= 4096) {
    const std::uint64_t chunk_size = 1024;
    const std::uint64_t nchunks = (total + chunk_size - 1) / chunk_size;
    std::vector<ChunkStats> parts(nchunks);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(nchunks); ++c) {
      const std::uint64_t begin = c * chunk_size;
      const std::uint64_t end = std::min(begin + chunk_size, total);
      parts[c] = scan_chunk(f, n, begin, end, opts);
    }
    return finalize(f, n, total, parts, opts);
  }
#endif
  return enumerate_all_serial(f, n, opts);
}

bool brute_force_validate(const Algebra3& a) {
  const std::size_t n = a.dim();
  const FieldSpec& f = a.field();
  std::vector<Vec> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = unit_vec(f, n, i);

  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) {
            const Vec lhs = a.bracket(e[p], e[q], a.bracket(e[i], e[j], e[k]));
            Vec rhs = a.bracket(a.bracket(e[p], e[q], e[i]), e[j], e[k]);
            add_scaled(rhs, Scalar::one(f), a.bracket(e[i], a.bracket(e[p], e[q], e[j]), e[k]));
            add_scaled(rhs, Scalar::one(f), a.bracket(e[i], e[j], a.bracket(e[p], e[q], e[k])));
            if (lhs != rhs) return false;
          }
  return true;
}

}  // namespace leib3
