#include "leib3/bounds.hpp"

namespace leib3 {

BoundReport schur_report(const Algebra3& a) {
  if (!a.is_valid())
    throw InvalidAlgebraError(
        "schur_report requires a valid algebra (identity check failed)");

  BoundReport rep;
  rep.d = center(a, CenterKind::lm).codim();
  rep.r = center(a, CenterKind::right).codim();
  rep.d0 = center(a, CenterKind::full).codim();
  rep.dim_derived = derived_ideal(a).dim();

  const std::uint64_t d = rep.d, r = rep.r, d0 = rep.d0;
  rep.bound_thm = d * d * (d + r);
  rep.bound_cor1 = d0 * d0 * d0;
  rep.holds_thm = rep.dim_derived <= rep.bound_thm;
  rep.holds_cor1 = rep.dim_derived <= rep.bound_cor1;

  if (a.field().characteristic() != 2) {
    rep.lie3 = a.is_lie3();
    if (rep.lie3) {
      // product of three consecutive integers, zero for d0 < 3
      const std::uint64_t b = d0 >= 3 ? d0 * (d0 - 1) * (d0 - 2) / 6 : 0;
      rep.bound_cor2 = b;
      rep.holds_cor2 = rep.dim_derived <= b;
    }
  }
  return rep;
}

TightnessGap tightness_gap(const BoundReport& rep) {
  TightnessGap g;
  g.gap_thm = static_cast<std::int64_t>(rep.bound_thm) -
              static_cast<std::int64_t>(rep.dim_derived);
  g.gap_cor1 = static_cast<std::int64_t>(rep.bound_cor1) -
               static_cast<std::int64_t>(rep.dim_derived);
  if (rep.bound_cor2)
    g.gap_cor2 = static_cast<std::int64_t>(*rep.bound_cor2) -
                 static_cast<std::int64_t>(rep.dim_derived);
  return g;
}

}  // namespace leib3
