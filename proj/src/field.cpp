#include "leib3/field.hpp"

#include <charconv>
#include <utility>

namespace leib3 {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t reduce_i64(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

// Inverse mod p by extended Euclid; u is nonzero and reduced.
std::uint32_t invmod(std::uint32_t u, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = u;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 16))
    throw UsageError("prime field modulus must be < 2^16, got " + std::to_string(p));
  if (!is_prime_u32(p))
    throw UsageError("prime field modulus must be prime, got " + std::to_string(p));
  FieldSpec f;
  f.kind = Kind::prime_field;
  f.p = p;
  return f;
}

std::string FieldSpec::str() const {
  return is_prime_field() ? "Fp:" + std::to_string(p) : "Q";
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    std::uint32_t p = 0;
    const char* first = text.data() + 3;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec != std::errc() || ptr != last)
      throw ParseError("bad field modulus in \"" + std::string(text) + "\"");
    return prime(p);
  }
  throw ParseError("bad field \"" + std::string(text) + "\": expected Q or Fp:<p>");
}

Scalar::Scalar(const FieldSpec& f, long value) : field_(f) {
  if (f.is_prime_field())
    res_ = reduce_i64(value, f.p);
  else
    rat_ = value;
}

Scalar Scalar::rational(mpq_class v) {
  v.canonicalize();
  return Scalar(FieldSpec::rationals(), std::move(v), 0);
}

Scalar Scalar::residue(const FieldSpec& f, std::uint64_t r) {
  if (!f.is_prime_field())
    throw UsageError("residue() requires a prime field");
  return Scalar(f, mpq_class(), static_cast<std::uint32_t>(r % f.p));
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
  auto bad = [&](const char* why) {
    return ParseError("bad scalar \"" + std::string(text) + "\" for " + f.str() +
                      ": " + why);
  };
  if (text.empty()) throw bad("empty string");
  std::string_view body = text;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) throw bad("sign without digits");

  auto digits_only = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };

  std::string_view num = body, den;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }

  if (f.is_prime_field()) {
    if (!den.empty() || !digits_only(num)) throw bad("expected a decimal residue");
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
    if (ec == std::errc::result_out_of_range) {
      // huge residue strings still reduce mod p exactly
      mpz_class big(std::string(num), 10);
      v = mpz_class(big % f.p).get_ui();
    } else if (ec != std::errc() || ptr != num.data() + num.size()) {
      throw bad("expected a decimal residue");
    }
    std::uint32_t r = static_cast<std::uint32_t>(v % f.p);
    if (negative && r != 0) r = f.p - r;
    return residue(f, r);
  }

  if (!digits_only(num)) throw bad("expected an integer numerator");
  mpq_class q;
  if (den.empty()) {
    q = mpq_class(mpz_class(std::string(num), 10));
  } else {
    if (!digits_only(den)) throw bad("expected an integer denominator");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw bad("zero denominator");
    q = mpq_class(mpz_class(std::string(num), 10), d);
    q.canonicalize();
  }
  if (negative) q = -q;
  return Scalar(f, std::move(q), 0);
}

bool Scalar::is_zero() const {
  return field_.is_prime_field() ? res_ == 0 : rat_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_prime_field() ? res_ == 1 : rat_ == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw UsageError("field mismatch: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator-() const {
  if (field_.is_prime_field())
    return Scalar(field_, mpq_class(), res_ == 0 ? 0 : field_.p - res_);
  return Scalar(field_, mpq_class(-rat_), 0);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero in " + field_.str());
  if (field_.is_prime_field())
    return Scalar(field_, mpq_class(), invmod(res_, field_.p));
  return Scalar(field_, mpq_class(1) / rat_, 0);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (a.field_.is_prime_field()) {
    std::uint64_t s = std::uint64_t(a.res_) + b.res_;
    if (s >= a.field_.p) s -= a.field_.p;
    return Scalar(a.field_, mpq_class(), static_cast<std::uint32_t>(s));
  }
  return Scalar(a.field_, mpq_class(a.rat_ + b.rat_), 0);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (a.field_.is_prime_field()) {
    std::uint64_t m = std::uint64_t(a.res_) * b.res_ % a.field_.p;
    return Scalar(a.field_, mpq_class(), static_cast<std::uint32_t>(m));
  }
  return Scalar(a.field_, mpq_class(a.rat_ * b.rat_), 0);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (b.is_zero()) throw DivisionByZeroError("division by zero in " + a.field_.str());
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (a.field_.is_prime_field()) return a.res_ == b.res_;
  return a.rat_ == b.rat_;
}

std::string Scalar::str() const {
  if (field_.is_prime_field()) return std::to_string(res_);
  return rat_.get_str();
}

const mpq_class& Scalar::rat() const {
  if (field_.is_prime_field()) throw UsageError("rat() called on a prime-field scalar");
  return rat_;
}

std::uint32_t Scalar::res() const {
  if (!field_.is_prime_field()) throw UsageError("res() called on a rational scalar");
  return res_;
}

}  // namespace leib3
