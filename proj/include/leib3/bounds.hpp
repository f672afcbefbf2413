#pragma once

#include <cstdint>
#include <optional>

#include "leib3/structure.hpp"

namespace leib3 {

/// Center codimensions, the derived-ideal dimension, and the three
/// dimension-bound verdicts: d^2(d+r) from the lm/right codimensions,
/// d0^3 from the full-center codimension, and d0(d0-1)(d0-2)/6 on Lie
/// 3-algebras (characteristic != 2 only).
struct BoundReport {
  std::size_t d = 0;            // codim of the lm-center
  std::size_t r = 0;            // codim of the right center
  std::size_t d0 = 0;           // codim of the full center
  std::size_t dim_derived = 0;  // dim [L,L,L]
  std::uint64_t bound_thm = 0;  // d^2 (d + r)
  std::uint64_t bound_cor1 = 0; // d0^3
  bool lie3 = false;
  std::optional<std::uint64_t> bound_cor2;  // d0(d0-1)(d0-2)/6, iff lie3
  bool holds_thm = false;
  bool holds_cor1 = false;
  std::optional<bool> holds_cor2;  // present iff lie3
};

/// Computes the report for a validated algebra (re-validates when the cached
/// verdict is unknown; throws InvalidAlgebraError otherwise). Over
/// characteristic 2 the Lie-3 branch is disabled: lie3 = false, cor2 absent.
BoundReport schur_report(const Algebra3& a);

struct TightnessGap {
  std::int64_t gap_thm = 0;
  std::int64_t gap_cor1 = 0;
  std::optional<std::int64_t> gap_cor2;
};

/// bound - dim_derived for each bound; non-negative iff the bound holds.
TightnessGap tightness_gap(const BoundReport& rep);

}  // namespace leib3
