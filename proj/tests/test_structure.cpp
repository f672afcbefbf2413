#include <doctest.h>

#include "corpus.hpp"
#include "leib3/structure.hpp"

using namespace leib3;
using leib3::testing::build_corpus;

namespace {

Vec vec(const FieldSpec& f, std::vector<long> entries) {
  Vec v;
  for (long x : entries) v.emplace_back(f, x);
  return v;
}

const FieldSpec Q = FieldSpec::rationals();

}  // namespace

TEST_SUITE("structure") {

TEST_CASE("centers of the canonical examples") {
  const Algebra3 ab = abelian(3, Q);
  for (CenterKind k : {CenterKind::left, CenterKind::middle, CenterKind::right,
                       CenterKind::lm, CenterKind::full})
    CHECK(center(ab, k) == Subspace::full(Q, 3));

  const Algebra3 a = a2(Q);
  const Subspace e1_span = Subspace::span_of(Q, 2, {vec(Q, {0, 1})});
  for (CenterKind k : {CenterKind::left, CenterKind::middle, CenterKind::right,
                       CenterKind::lm, CenterKind::full})
    CHECK(center(a, k) == e1_span);

  CHECK(center(filippov4(Q), CenterKind::full) == Subspace::zero(Q, 4));
}

TEST_CASE("stacked-kernel centers match the intersection route") {
  for (const auto& entry : build_corpus()) {
    if (entry.algebra.dim() > 5) continue;  // keep the dual route cheap
    const Subspace l = center(entry.algebra, CenterKind::left);
    const Subspace m = center(entry.algebra, CenterKind::middle);
    const Subspace r = center(entry.algebra, CenterKind::right);
    CHECK(center(entry.algebra, CenterKind::lm) == intersect(l, m));
    CHECK(center(entry.algebra, CenterKind::full) == intersect(intersect(l, m), r));
  }
}

TEST_CASE("annihilators") {
  const Algebra3 a = a2(Q);
  const Subspace L = Subspace::full(Q, 2);

  // Ann_L^l(L) = left center
  CHECK(annihilator(a, L, L, Side::left) == center(a, CenterKind::left));
  CHECK(annihilator(a, L, L, Side::middle) == center(a, CenterKind::middle));
  CHECK(annihilator(a, L, L, Side::right) == center(a, CenterKind::right));
  CHECK(annihilator(a, L, L, Side::all) == center(a, CenterKind::full));

  // every bracket against span{e1} vanishes by construction
  const Subspace e1_span = Subspace::span_of(Q, 2, {vec(Q, {0, 1})});
  CHECK(annihilator(a, L, e1_span, Side::left) == L);

  // the abelian algebra annihilates everything
  const Algebra3 ab = abelian(3, Q);
  const Subspace h = Subspace::span_of(Q, 3, {vec(Q, {1, 1, 0})});
  for (Side s : {Side::left, Side::middle, Side::right, Side::all})
    CHECK(annihilator(ab, h, Subspace::full(Q, 3), s) == h);

  CHECK_THROWS_AS(annihilator(a, Subspace::full(Q, 3), L, Side::left), UsageError);
}

TEST_CASE("derived ideal") {
  CHECK(derived_ideal(abelian(3, Q)) == Subspace::zero(Q, 3));
  CHECK(derived_ideal(a2(Q)) == Subspace::span_of(Q, 2, {vec(Q, {0, 1})}));
  CHECK(derived_ideal(filippov4(Q)) == Subspace::full(Q, 4));
}

TEST_CASE("derived ideal dimension adds over direct sums") {
  const Algebra3 lhs = a2(Q), rhs = central_family({2, 2, 13, Q});
  CHECK(derived_ideal(direct_sum(lhs, rhs)).dim() ==
        derived_ideal(lhs).dim() + derived_ideal(rhs).dim());
}

TEST_CASE("subalgebra predicate") {
  const Algebra3 a = a2(Q);
  CHECK(is_subalgebra(a, Subspace::zero(Q, 2)));
  CHECK(is_subalgebra(a, Subspace::full(Q, 2)));
  CHECK(!is_subalgebra(a, Subspace::span_of(Q, 2, {vec(Q, {1, 0})})));
}

TEST_CASE("ideal predicate") {
  const Algebra3 a = a2(Q);
  for (Side s : {Side::left, Side::middle, Side::right, Side::all})
    CHECK(is_ideal(a, Subspace::full(Q, 2), s));
  CHECK(is_ideal(a, Subspace::span_of(Q, 2, {vec(Q, {0, 1})}), Side::all));

  // in filippov4, span{e0} fails left absorption: [e1,e2,e0] lands on e3
  const Algebra3 fil = filippov4(Q);
  CHECK(!is_ideal(fil, Subspace::span_of(Q, 4, {vec(Q, {1, 0, 0, 0})}), Side::left));

  // absorption alone is not enough: span{e0} in a2 is not even a subalgebra
  CHECK(!is_ideal(a, Subspace::span_of(Q, 2, {vec(Q, {1, 0})}), Side::all));
}

TEST_CASE("quotient by the zero subspace is the identity") {
  const Algebra3 a = a2(Q);
  const QuotientResult q = quotient(a, Subspace::zero(Q, 2));
  CHECK(q.algebra.dim() == 2);
  CHECK(q.algebra.tensor() == a.tensor());
  CHECK(q.projection == Matrix::identity(Q, 2));
}

TEST_CASE("quotient of a2 by its center is abelian") {
  const Algebra3 a = a2(Q);
  const QuotientResult q = quotient(a, Subspace::span_of(Q, 2, {vec(Q, {0, 1})}));
  CHECK(q.algebra.dim() == 1);
  CHECK(q.algebra.tensor().entry_count() == 0);
  CHECK(q.projection.apply(vec(Q, {3, 5})) == vec(Q, {3}));
}

TEST_CASE("quotient by a non-ideal fails with a witness") {
  const Algebra3 a = a2(Q);
  const Subspace not_ideal = Subspace::span_of(Q, 2, {vec(Q, {1, 0})});
  try {
    quotient(a, not_ideal);
    FAIL("expected NotAnIdealError");
  } catch (const NotAnIdealError& e) {
    CHECK(e.witness.x == vec(Q, {1, 0}));
    CHECK(e.witness.y == vec(Q, {1, 0}));
    CHECK(e.witness.z == vec(Q, {1, 0}));
    CHECK(e.witness.value == vec(Q, {0, 1}));
    CHECK(std::string(e.witness.check) == "subalgebra");
  }
}

TEST_CASE("quotient projection kills the ideal and validates") {
  for (const auto& entry : build_corpus()) {
    if (entry.algebra.dim() > 5) continue;
    const Subspace z = center(entry.algebra, CenterKind::full);
    const QuotientResult q = quotient(entry.algebra, z);
    CHECK(q.algebra.dim() == z.codim());
    for (std::size_t r = 0; r < z.dim(); ++r)
      CHECK(is_zero_vec(q.projection.apply(z.basis().row(r))));
    CHECK(q.algebra.validate().empty());
  }
}

TEST_CASE("quotient respects bracket structure through the projection") {
  // pi([x,y,z]) = [pi x, pi y, pi z] in the quotient, spot-checked
  const Algebra3 a = direct_sum(a2(Q), a2(Q));
  const Subspace z = center(a, CenterKind::full);
  const QuotientResult q = quotient(a, z);
  SplitMix64 gen(5);
  for (int trial = 0; trial < 20; ++trial) {
    Vec x, y, zv;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      x.emplace_back(Q, static_cast<long>(gen.next() % 5) - 2);
      y.emplace_back(Q, static_cast<long>(gen.next() % 5) - 2);
      zv.emplace_back(Q, static_cast<long>(gen.next() % 5) - 2);
    }
    const Vec lhs = q.projection.apply(a.bracket(x, y, zv));
    const Vec rhs = q.algebra.bracket(q.projection.apply(x), q.projection.apply(y),
                                      q.projection.apply(zv));
    CHECK(lhs == rhs);
  }
}

}  // TEST_SUITE
