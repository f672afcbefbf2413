#include <doctest.h>

#include "leib3/field.hpp"
#include "leib3/generators.hpp"

using namespace leib3;

namespace {

Scalar q(long num, long den = 1) {
  return Scalar::rational(mpq_class(num, den));
}

// random nonzero-or-zero scalar from the shared deterministic stream
Scalar random_scalar(SplitMix64& gen, const FieldSpec& f) {
  if (f.is_prime_field()) return Scalar::residue(f, gen.next());
  const long num = static_cast<long>(gen.next() % 41) - 20;
  const long den = 1 + static_cast<long>(gen.next() % 19);
  return Scalar::rational(mpq_class(num, den));
}

}  // namespace

TEST_SUITE("field") {

TEST_CASE("field spec construction and characteristic") {
  CHECK(FieldSpec::rationals().characteristic() == 0);
  CHECK(FieldSpec::prime(2).characteristic() == 2);
  CHECK(FieldSpec::prime(13).characteristic() == 13);
  CHECK(FieldSpec::prime(65521).p == 65521);  // largest prime below 2^16
  CHECK_THROWS_AS(FieldSpec::prime(0), UsageError);
  CHECK_THROWS_AS(FieldSpec::prime(1), UsageError);
  CHECK_THROWS_AS(FieldSpec::prime(4), UsageError);
  CHECK_THROWS_AS(FieldSpec::prime(65536), UsageError);
  CHECK_THROWS_AS(FieldSpec::prime(65535), UsageError);  // 3 * 5 * 17 * 257
}

TEST_CASE("field spec text grammar") {
  CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("Fp:7") == FieldSpec::prime(7));
  CHECK_THROWS_AS(FieldSpec::parse("R"), ParseError);
  CHECK_THROWS_AS(FieldSpec::parse("Fp:abc"), ParseError);
  CHECK_THROWS_AS(FieldSpec::parse("Fp:"), ParseError);
}

TEST_CASE("rational arithmetic in lowest terms") {
  CHECK((q(1, 2) + q(1, 3)).str() == "5/6");
  CHECK((q(2, 4)).str() == "1/2");
  CHECK((q(-4, 6)).str() == "-2/3");
  CHECK((q(3) * q(1, 3)).str() == "1");
  CHECK((q(1) / q(-2)).str() == "-1/2");
  CHECK((-q(0)).str() == "0");
  CHECK(q(7, 7) == Scalar::one(FieldSpec::rationals()));
  CHECK_THROWS_AS(q(1) / q(0), DivisionByZeroError);
  CHECK_THROWS_AS(q(0).inverse(), DivisionByZeroError);
}

TEST_CASE("prime field arithmetic") {
  const FieldSpec f5 = FieldSpec::prime(5);
  const FieldSpec f7 = FieldSpec::prime(7);
  CHECK((Scalar(f5, 3) * Scalar(f5, 4)).res() == 2);  // 12 mod 5
  CHECK(Scalar(f7, 3).inverse().res() == 5);          // 3 * 5 = 15 = 1 mod 7
  CHECK((Scalar(f5, 2) - Scalar(f5, 4)).res() == 3);
  CHECK(Scalar(f5, -1).res() == 4);
  CHECK((Scalar(f5, 4) + Scalar(f5, 1)).is_zero());
  CHECK_THROWS_AS(Scalar(f5, 0).inverse(), DivisionByZeroError);
  CHECK_THROWS_AS(Scalar(f5, 1) / Scalar(f5, 0), DivisionByZeroError);
}

TEST_CASE("field mismatch is a usage error") {
  CHECK_THROWS_AS(Scalar(FieldSpec::prime(5), 1) + Scalar(FieldSpec::prime(7), 1),
                  UsageError);
  CHECK_THROWS_AS(q(1) * Scalar(FieldSpec::prime(5), 1), UsageError);
}

TEST_CASE("scalar text forms round-trip") {
  const FieldSpec Q = FieldSpec::rationals();
  for (const char* text : {"0", "1", "-1", "5/6", "-2/3", "100000000000000000001"})
    CHECK(Scalar::parse(Q, text).str() == text);
  CHECK(Scalar::parse(Q, "4/6").str() == "2/3");  // canonicalized on read
  CHECK(Scalar::parse(Q, "+3").str() == "3");

  const FieldSpec f7 = FieldSpec::prime(7);
  CHECK(Scalar::parse(f7, "13").res() == 6);
  CHECK(Scalar::parse(f7, "-1").res() == 6);
  CHECK(Scalar::parse(f7, "6").str() == "6");

  CHECK_THROWS_AS(Scalar::parse(Q, ""), ParseError);
  CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(Q, "a/b"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(Q, "1.5"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(f7, "1/2"), ParseError);
}

TEST_CASE("field axioms hold on random scalars") {
  for (const FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
    SplitMix64 gen(20240901);
    for (int trial = 0; trial < 300; ++trial) {
      const Scalar a = random_scalar(gen, f);
      const Scalar b = random_scalar(gen, f);
      const Scalar c = random_scalar(gen, f);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a + b == b + a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + (-a) == Scalar::zero(f));
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == Scalar::one(f));
        CHECK(b / a * a == b);
      }
    }
  }
}

TEST_CASE("canonical form is unique") {
  // equal values have identical stored representation, hence identical text
  SplitMix64 gen(7);
  const FieldSpec Q = FieldSpec::rationals();
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar a = random_scalar(gen, Q);
    const Scalar b = random_scalar(gen, Q);
    const Scalar lhs = a + b;
    const Scalar rhs = b + a;
    CHECK(lhs == rhs);
    CHECK(lhs.str() == rhs.str());
  }
  // a scalar reconstructed from its text equals the original exactly
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar a = random_scalar(gen, Q);
    CHECK(Scalar::parse(Q, a.str()) == a);
  }
}

}  // TEST_SUITE
