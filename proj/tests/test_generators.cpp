#include <doctest.h>

#include "corpus.hpp"
#include "leib3/structure.hpp"

using namespace leib3;
using leib3::testing::build_corpus;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_SUITE("generators") {

TEST_CASE("abelian") {
  CHECK(abelian(0, Q).dim() == 0);
  CHECK(abelian(0, Q).validate().empty());
  const Algebra3 a = abelian(3, FieldSpec::prime(2));
  CHECK(a.dim() == 3);
  CHECK(derived_ideal(a).dim() == 0);
}

TEST_CASE("the a2 seed reproduces a2 through central_family") {
  const Algebra3 generated = central_family({1, 1, kA2Seed, Q});
  CHECK(generated.tensor() == a2(Q).tensor());
  CHECK(generated.validate().empty());
}

TEST_CASE("central family basics") {
  CHECK(central_family({0, 3, 1, Q}).tensor() == abelian(3, Q).tensor());

  const Algebra3 a = central_family({2, 1, 12345, FieldSpec::prime(3)});
  CHECK(a.dim() == 3);
  CHECK(a.validate().empty());
  const Subspace central = Subspace::span_of(a.field(), 3, {unit_vec(a.field(), 3, 2)});
  CHECK(central.contains(derived_ideal(a)));
  CHECK(center(a, CenterKind::full).contains(central));
}

TEST_CASE("central family is deterministic in the seed") {
  const CentralFamilySpec spec{3, 2, 77, FieldSpec::prime(5)};
  CHECK(central_family(spec).tensor() == central_family(spec).tensor());
  const Algebra3 other = central_family({3, 2, 78, FieldSpec::prime(5)});
  CHECK(central_family(spec).tensor() != other.tensor());
}

TEST_CASE("filippov4 signs") {
  const Algebra3 fil = filippov4(Q);
  const auto bracket_of = [&](int i, int j, int k) {
    return fil.bracket(unit_vec(Q, 4, i), unit_vec(Q, 4, j), unit_vec(Q, 4, k));
  };
  Vec e3 = unit_vec(Q, 4, 3), e0 = unit_vec(Q, 4, 0);
  Vec minus_e0 = zero_vec(Q, 4);
  minus_e0[0] = -Scalar::one(Q);
  CHECK(bracket_of(0, 1, 2) == e3);        // identity permutation
  CHECK(bracket_of(1, 2, 3) == minus_e0);  // odd 4-cycle
  CHECK(is_zero_vec(bracket_of(0, 0, 2)));
  CHECK(fil.validate().empty());
  CHECK(fil.is_lie3());
  CHECK_THROWS_AS(filippov4(FieldSpec::prime(2)), UnsupportedFieldError);
  CHECK(filippov4(FieldSpec::prime(5)).validate().empty());
  CHECK(filippov4(FieldSpec::prime(3)).validate().empty());
}

TEST_CASE("direct sums") {
  CHECK(direct_sum(abelian(1, Q), abelian(2, Q)).tensor() == abelian(3, Q).tensor());
  CHECK_THROWS_AS(direct_sum(abelian(1, Q), abelian(1, FieldSpec::prime(3))),
                  UsageError);

  const Algebra3 s = direct_sum(a2(Q), abelian(1, Q));
  CHECK(derived_ideal(s).dim() == 1);
  CHECK(center(s, CenterKind::full).dim() == 2);
}

TEST_CASE("centers add componentwise over direct sums") {
  const Algebra3 lhs = a2(Q), rhs = central_family({2, 1, 21, Q});
  const Algebra3 s = direct_sum(lhs, rhs);
  for (CenterKind k : {CenterKind::left, CenterKind::middle, CenterKind::right,
                       CenterKind::lm, CenterKind::full}) {
    const Subspace zl = center(lhs, k), zr = center(rhs, k);
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < zl.dim(); ++r) {
      Vec v = zl.basis().row(r);
      v.resize(s.dim(), Scalar::zero(Q));
      rows.push_back(std::move(v));
    }
    for (std::size_t r = 0; r < zr.dim(); ++r) {
      Vec v = zero_vec(Q, lhs.dim());
      const Vec tail = zr.basis().row(r);
      v.insert(v.end(), tail.begin(), tail.end());
      rows.push_back(std::move(v));
    }
    CHECK(center(s, k) == Subspace::span_of(Q, s.dim(), rows));
  }
}

TEST_CASE("every corpus algebra self-verifies") {
  const auto corpus = build_corpus();
  CHECK(corpus.size() >= 200);
  for (const auto& entry : corpus) {
    INFO(entry.name);
    CHECK(entry.algebra.validate().empty());
  }
}

}  // TEST_SUITE
