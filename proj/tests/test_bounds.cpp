#include <doctest.h>

#include "corpus.hpp"
#include "leib3/bounds.hpp"

using namespace leib3;
using leib3::testing::build_corpus;

TEST_SUITE("bounds") {

TEST_CASE("abelian report is all zeros and holds") {
  const BoundReport one_dim = schur_report(abelian(1, FieldSpec::rationals()));
  CHECK(one_dim.d0 == 0);
  CHECK(one_dim.dim_derived == 0);
  CHECK(one_dim.bound_thm == 0);

  const BoundReport rep = schur_report(abelian(3, FieldSpec::rationals()));
  CHECK(rep.d == 0);
  CHECK(rep.r == 0);
  CHECK(rep.d0 == 0);
  CHECK(rep.dim_derived == 0);
  CHECK(rep.bound_thm == 0);
  CHECK(rep.bound_cor1 == 0);
  CHECK(rep.holds_thm);
  CHECK(rep.holds_cor1);
  CHECK(rep.lie3);  // zero bracket is antisymmetric
  CHECK(*rep.bound_cor2 == 0);
  CHECK(*rep.holds_cor2);
  const TightnessGap gap = tightness_gap(rep);
  CHECK(gap.gap_thm == 0);
  CHECK(gap.gap_cor1 == 0);
}

TEST_CASE("a2 attains d0^3") {
  const BoundReport rep = schur_report(a2(FieldSpec::rationals()));
  CHECK(rep.d == 1);
  CHECK(rep.r == 1);
  CHECK(rep.d0 == 1);
  CHECK(rep.dim_derived == 1);
  CHECK(rep.bound_thm == 2);   // 1^2 (1+1)
  CHECK(rep.bound_cor1 == 1);  // attained
  CHECK(rep.holds_thm);
  CHECK(rep.holds_cor1);
  CHECK(!rep.lie3);
  CHECK(!rep.bound_cor2.has_value());
  const TightnessGap gap = tightness_gap(rep);
  CHECK(gap.gap_thm == 1);
  CHECK(gap.gap_cor1 == 0);
  CHECK(!gap.gap_cor2.has_value());
}

TEST_CASE("filippov4 attains the Lie bound") {
  const BoundReport rep = schur_report(filippov4(FieldSpec::rationals()));
  CHECK(rep.d0 == 4);
  CHECK(rep.dim_derived == 4);
  CHECK(rep.lie3);
  CHECK(*rep.bound_cor2 == 4);  // 4*3*2/6
  CHECK(*rep.holds_cor2);
  CHECK(tightness_gap(rep).gap_cor2 == 0);
}

TEST_CASE("direct sum of a2 with itself") {
  const FieldSpec Q = FieldSpec::rationals();
  const BoundReport rep = schur_report(direct_sum(a2(Q), a2(Q)));
  CHECK(rep.d == 2);
  CHECK(rep.r == 2);
  CHECK(rep.dim_derived == 2);
  CHECK(rep.bound_thm == 16);  // 2^2 (2+2)
  CHECK(rep.holds_thm);
}

TEST_CASE("characteristic 2 disables the Lie branch") {
  const BoundReport rep = schur_report(a2(FieldSpec::prime(2)));
  CHECK(!rep.lie3);
  CHECK(!rep.bound_cor2.has_value());
  CHECK(!rep.holds_cor2.has_value());
}

TEST_CASE("invalid algebras are rejected") {
  StructureTensor t(FieldSpec::rationals(), 2);
  t.set(0, 0, 0, unit_vec(FieldSpec::rationals(), 2, 0));
  const Algebra3 bad(std::move(t));
  CHECK_THROWS_AS(schur_report(bad), InvalidAlgebraError);
}

TEST_CASE("verdicts and codim monotonicity across the corpus") {
  for (const auto& entry : build_corpus()) {
    INFO(entry.name);
    const BoundReport rep = schur_report(entry.algebra);
    CHECK(rep.holds_thm);
    CHECK(rep.holds_cor1);
    CHECK(rep.d <= rep.d0);
    CHECK(rep.r <= rep.d0);
    if (rep.lie3) CHECK(*rep.holds_cor2);
    if (rep.bound_cor2) {
      const std::uint64_t expected =
          rep.d0 >= 3 ? std::uint64_t(rep.d0) * (rep.d0 - 1) * (rep.d0 - 2) / 6 : 0;
      CHECK(*rep.bound_cor2 == expected);
    }
  }
}

}  // TEST_SUITE
