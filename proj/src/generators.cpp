#include "leib3/generators.hpp"

#include <algorithm>

namespace leib3 {

namespace {

Algebra3 verified(Algebra3 a, const char* family) {
  if (!a.validate().empty())
    throw InternalError(std::string("generator ") + family +
                        " produced an algebra failing the identity check");
  return a;
}

}  // namespace

Scalar draw_scalar(SplitMix64& gen, const FieldSpec& f) {
  const std::uint64_t z = gen.next();
  if (f.is_prime_field()) return Scalar::residue(f, z);
  return Scalar(f, static_cast<long>(z % 5) - 2);
}

Algebra3 abelian(std::size_t n, const FieldSpec& f) {
  return Algebra3(StructureTensor(f, n));  // empty tensor; trivially valid
}

Algebra3 central_family(const CentralFamilySpec& spec) {
  const std::size_t p = spec.generator_dim, q = spec.central_dim;
  const std::size_t n = p + q;
  SplitMix64 gen(spec.seed);
  StructureTensor tensor(spec.field, n);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t k = 0; k < p; ++k) {
        Vec value = zero_vec(spec.field, n);
        for (std::size_t t = 0; t < q; ++t) value[p + t] = draw_scalar(gen, spec.field);
        tensor.set(i, j, k, std::move(value));
      }
  return verified(Algebra3(std::move(tensor)), "central_family");
}

// splitmix64(3).next() % 5 == 3, so the single rational draw is 1.
const std::uint64_t kA2Seed = 3;

Algebra3 a2(const FieldSpec& f) {
  StructureTensor tensor(f, 2);
  tensor.set(0, 0, 0, unit_vec(f, 2, 1));
  return verified(Algebra3(std::move(tensor)), "a2");
}

Algebra3 filippov4(const FieldSpec& f) {
  if (f.characteristic() == 2)
    throw UnsupportedFieldError("filippov4 requires characteristic != 2");
  StructureTensor tensor(f, 4);
  std::uint32_t perm[4] = {0, 1, 2, 3};
  // all permutations (i,j,k,l) of (0,1,2,3); sign = parity
  do {
    int inversions = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Vec value = zero_vec(f, 4);
    value[perm[3]] = inversions % 2 == 0 ? Scalar::one(f) : -Scalar::one(f);
    tensor.set(perm[0], perm[1], perm[2], std::move(value));
  } while (std::next_permutation(perm, perm + 4));

  Algebra3 out = verified(Algebra3(std::move(tensor)), "filippov4");
  if (!out.is_lie3())
    throw InternalError("filippov4 sign table failed the antisymmetry check");
  return out;
}

Algebra3 direct_sum(const Algebra3& a, const Algebra3& b) {
  if (a.field() != b.field())
    throw UsageError("direct_sum: field mismatch (" + a.field().str() + " vs " +
                     b.field().str() + ")");
  const std::size_t na = a.dim(), n = na + b.dim();
  StructureTensor tensor(a.field(), n);
  for (const auto& [key, coeffs] : a.tensor().entries()) {
    Vec value = zero_vec(a.field(), n);
    for (std::size_t m = 0; m < na; ++m) value[m] = coeffs[m];
    tensor.set(key[0], key[1], key[2], std::move(value));
  }
  for (const auto& [key, coeffs] : b.tensor().entries()) {
    Vec value = zero_vec(a.field(), n);
    for (std::size_t m = 0; m < b.dim(); ++m) value[na + m] = coeffs[m];
    tensor.set(na + key[0], na + key[1], na + key[2], std::move(value));
  }
  return verified(Algebra3(std::move(tensor)), "direct_sum");
}

}  // namespace leib3
