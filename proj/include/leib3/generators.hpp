#pragma once

#include "leib3/algebra.hpp"

namespace leib3 {

/// Deterministic 64-bit stream used wherever reproducible pseudo-random
/// draws are needed (corpus generation, tests). The update function is part
/// of the external contract and documented in the README: splitmix64.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Scalar drawn from the stream: residue z mod p over prime fields, the
/// integer (z mod 5) - 2 over the rationals.
Scalar draw_scalar(SplitMix64& gen, const FieldSpec& f);

/// Central-extension family: generator_dim basis vectors whose brackets are
/// drawn from the seed and land in the central_dim trailing coordinates; any
/// bracket touching a central coordinate is zero. Every instance satisfies
/// the left Leibniz 3-identity (each side of the identity involves either a
/// bracket of a central value or a bracket landing in the center, both
/// zero); the constructor re-verifies anyway.
struct CentralFamilySpec {
  std::size_t generator_dim = 0;  // p
  std::size_t central_dim = 0;    // q
  std::uint64_t seed = 0;
  FieldSpec field;
};

/// Zero bracket on n coordinates.
Algebra3 abelian(std::size_t n, const FieldSpec& f);

Algebra3 central_family(const CentralFamilySpec& spec);

/// Smallest seed whose first rational draw is 1, so that
/// central_family{1, 1, kA2Seed, Q} is exactly the algebra a2().
extern const std::uint64_t kA2Seed;

/// The 2-dimensional algebra with [e_0,e_0,e_0] = e_1 and no other brackets;
/// equals central_family{1,1,kA2Seed,f} over the rationals.
Algebra3 a2(const FieldSpec& f);

/// The 4-dimensional algebra [e_i,e_j,e_k] = sum_l eps_{ijkl} e_l with
/// Levi-Civita signs; antisymmetric, validated at construction.
/// Characteristic 2 is rejected.
Algebra3 filippov4(const FieldSpec& f);

/// Componentwise bracket on the concatenated coordinates; mixed triples are
/// zero.
Algebra3 direct_sum(const Algebra3& a, const Algebra3& b);

}  // namespace leib3
