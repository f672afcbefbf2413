#include "leib3/algebra.hpp"

#include <algorithm>

namespace leib3 {

namespace {

std::uint64_t pow5(std::size_t n) {
  std::uint64_t t = 1;
  for (int i = 0; i < 5; ++i) t *= n;
  return t;
}

void check_index(std::size_t v, std::size_t dim, const char* what) {
  if (v >= dim)
    throw UsageError(std::string(what) + " index " + std::to_string(v) +
                     " out of range for dim " + std::to_string(dim));
}

}  // namespace

void StructureTensor::set(std::size_t i, std::size_t j, std::size_t k, Vec value) {
  check_index(i, dim_, "bracket");
  check_index(j, dim_, "bracket");
  check_index(k, dim_, "bracket");
  check_vec(field_, value, dim_, "bracket value");
  const BasisTriple key{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                        static_cast<std::uint32_t>(k)};
  if (is_zero_vec(value))
    entries_.erase(key);
  else
    entries_[key] = std::move(value);
}

const Vec* StructureTensor::find(std::size_t i, std::size_t j, std::size_t k) const {
  auto it = entries_.find(BasisTriple{static_cast<std::uint32_t>(i),
                                      static_cast<std::uint32_t>(j),
                                      static_cast<std::uint32_t>(k)});
  return it == entries_.end() ? nullptr : &it->second;
}

// Pointer table (i,j,k) -> coefficient vector, so the quintuple scan does
// array lookups instead of map searches.
struct Algebra3::DenseIndex {
  std::size_t n;
  std::vector<const Vec*> slot;  // n^3 entries

  explicit DenseIndex(const StructureTensor& t) : n(t.dim()), slot(n * n * n, nullptr) {
    for (const auto& [key, vec] : t.entries())
      slot[(std::size_t(key[0]) * n + key[1]) * n + key[2]] = &vec;
  }
  const Vec* at(std::size_t i, std::size_t j, std::size_t k) const {
    return slot[(i * n + j) * n + k];
  }
};

Algebra3::Algebra3(StructureTensor tensor) : tensor_(std::move(tensor)) {}

Algebra3& Algebra3::operator=(const Algebra3& o) {
  tensor_ = o.tensor_;
  validity_.store(o.validity(), std::memory_order_relaxed);
  return *this;
}

Algebra3& Algebra3::operator=(Algebra3&& o) noexcept {
  tensor_ = std::move(o.tensor_);
  validity_.store(o.validity(), std::memory_order_relaxed);
  return *this;
}

void Algebra3::set_bracket(std::size_t i, std::size_t j, std::size_t k, Vec value) {
  tensor_.set(i, j, k, std::move(value));
  validity_.store(Validity::unknown, std::memory_order_relaxed);
}

bool Algebra3::is_valid() const {
  Validity v = validity();
  if (v == Validity::unknown) {
    validate(0);
    v = validity();
  }
  return v == Validity::valid;
}

// defect(p,q,i,j,k) by tensor contraction:
//   lhs  = sum_m c_{ijk}^m c_{pqm}
//   rhs1 = sum_m c_{pqi}^m c_{mjk}
//   rhs2 = sum_m c_{pqj}^m c_{imk}
//   rhs3 = sum_m c_{pqk}^m c_{ijm}
Vec Algebra3::quintuple_defect(const DenseIndex& ix, std::uint32_t p, std::uint32_t q,
                               std::uint32_t i, std::uint32_t j,
                               std::uint32_t k) const {
  const std::size_t n = dim();
  Vec defect = zero_vec(field(), n);

  if (const Vec* inner = ix.at(i, j, k))
    for (std::size_t m = 0; m < n; ++m)
      if (!(*inner)[m].is_zero())
        if (const Vec* outer = ix.at(p, q, m)) add_scaled(defect, (*inner)[m], *outer);

  const Scalar minus_one = -Scalar::one(field());
  if (const Vec* ci = ix.at(p, q, i))
    for (std::size_t m = 0; m < n; ++m)
      if (!(*ci)[m].is_zero())
        if (const Vec* outer = ix.at(m, j, k))
          add_scaled(defect, minus_one * (*ci)[m], *outer);
  if (const Vec* cj = ix.at(p, q, j))
    for (std::size_t m = 0; m < n; ++m)
      if (!(*cj)[m].is_zero())
        if (const Vec* outer = ix.at(i, m, k))
          add_scaled(defect, minus_one * (*cj)[m], *outer);
  if (const Vec* ck = ix.at(p, q, k))
    for (std::size_t m = 0; m < n; ++m)
      if (!(*ck)[m].is_zero())
        if (const Vec* outer = ix.at(i, j, m))
          add_scaled(defect, minus_one * (*ck)[m], *outer);

  return defect;
}

std::vector<Violation> Algebra3::scan_range(const DenseIndex& ix, std::uint64_t begin,
                                            std::uint64_t end, std::size_t max_reports,
                                            std::uint64_t& defect_count) const {
  const std::uint64_t n = dim();
  std::vector<Violation> found;
  defect_count = 0;
  for (std::uint64_t t = begin; t < end; ++t) {
    std::uint64_t rest = t;
    const std::uint32_t k = static_cast<std::uint32_t>(rest % n); rest /= n;
    const std::uint32_t j = static_cast<std::uint32_t>(rest % n); rest /= n;
    const std::uint32_t i = static_cast<std::uint32_t>(rest % n); rest /= n;
    const std::uint32_t q = static_cast<std::uint32_t>(rest % n); rest /= n;
    const std::uint32_t p = static_cast<std::uint32_t>(rest);
    Vec defect = quintuple_defect(ix, p, q, i, j, k);
    if (is_zero_vec(defect)) continue;
    ++defect_count;
    if (found.size() < max_reports)
      found.push_back(Violation{{p, q, i, j, k}, std::move(defect)});
  }
  return found;
}

std::vector<Violation> Algebra3::validate_serial(std::size_t max_reports) const {
  const DenseIndex ix(tensor_);
  std::uint64_t defects = 0;
  std::vector<Violation> found = scan_range(ix, 0, pow5(dim()), max_reports, defects);
  validity_.store(defects == 0 ? Validity::valid : Validity::invalid,
                  std::memory_order_relaxed);
  return found;
}

std::vector<Violation> Algebra3::validate(std::size_t max_reports) const {
  const std::uint64_t total = pow5(dim());
#ifdef _OPENMP
  if (total >= 4096) {
    const DenseIndex ix(tensor_);
    const std::uint64_t chunk_size = 2048;
    const std::uint64_t nchunks = (total + chunk_size - 1) / chunk_size;
    std::vector<std::vector<Violation>> parts(nchunks);
    std::vector<std::uint64_t> counts(nchunks, 0);

#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(nchunks); ++c) {
      const std::uint64_t begin = c * chunk_size;
      const std::uint64_t end = std::min(begin + chunk_size, total);
      parts[c] = scan_range(ix, begin, end, max_reports, counts[c]);
    }

    // Chunk ranges are contiguous in lexicographic order, so concatenating
    // in chunk order keeps the deterministic-output contract.
    std::uint64_t defects = 0;
    std::vector<Violation> found;
    for (std::uint64_t c = 0; c < nchunks; ++c) {
      defects += counts[c];
      for (Violation& v : parts[c])
        if (found.size() < max_reports) found.push_back(std::move(v));
    }
    validity_.store(defects == 0 ? Validity::valid : Validity::invalid,
                    std::memory_order_relaxed);
    return found;
  }
#endif
  return validate_serial(max_reports);
}

bool Algebra3::has_defect_fast() const {
  const DenseIndex ix(tensor_);
  const std::uint64_t n = dim();
  for (std::uint32_t p = 0; p < n; ++p)
    for (std::uint32_t q = 0; q < n; ++q)
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
          for (std::uint32_t k = 0; k < n; ++k)
            if (!is_zero_vec(quintuple_defect(ix, p, q, i, j, k))) {
              validity_.store(Validity::invalid, std::memory_order_relaxed);
              return true;
            }
  validity_.store(Validity::valid, std::memory_order_relaxed);
  return false;
}

Vec Algebra3::bracket(const Vec& x, const Vec& y, const Vec& z) const {
  const std::size_t n = dim();
  check_vec(field(), x, n, "bracket slot 1");
  check_vec(field(), y, n, "bracket slot 2");
  check_vec(field(), z, n, "bracket slot 3");
  Vec acc = zero_vec(field(), n);
  for (const auto& [key, coeffs] : tensor_.entries()) {
    const Scalar& xi = x[key[0]];
    if (xi.is_zero()) continue;
    const Scalar& yj = y[key[1]];
    if (yj.is_zero()) continue;
    const Scalar& zk = z[key[2]];
    if (zk.is_zero()) continue;
    add_scaled(acc, xi * yj * zk, coeffs);
  }
  return acc;
}

Matrix Algebra3::left_mult_matrix(const Vec& u, const Vec& v) const {
  const std::size_t n = dim();
  check_vec(field(), u, n, "left_mult slot 1");
  check_vec(field(), v, n, "left_mult slot 2");
  Matrix m(field(), n, n);
  for (const auto& [key, coeffs] : tensor_.entries()) {
    const Scalar factor = u[key[0]] * v[key[1]];
    if (factor.is_zero()) continue;
    for (std::size_t row = 0; row < n; ++row)
      if (!coeffs[row].is_zero()) m.at(row, key[2]) += factor * coeffs[row];
  }
  return m;
}

// On the basis triple (i,j,k) the derivation identity contracts to
//   f(c_{ijk}) = sum_a f_{ai} c_{ajk} + sum_a f_{aj} c_{iak} + sum_a f_{ak} c_{ija}
// since f(e_i) = sum_a f_{ai} e_a.
bool Algebra3::is_derivation(const Matrix& f) const {
  const std::size_t n = dim();
  if (f.rows() != n || f.cols() != n)
    throw UsageError("is_derivation: map must be " + std::to_string(n) + "x" +
                     std::to_string(n));
  if (f.field() != field())
    throw UsageError("is_derivation: field mismatch");

  const DenseIndex ix(tensor_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = zero_vec(field(), n);
        if (const Vec* c = ix.at(i, j, k)) lhs = f.apply(*c);
        Vec rhs = zero_vec(field(), n);
        for (std::size_t a = 0; a < n; ++a) {
          if (!f.at(a, i).is_zero())
            if (const Vec* c = ix.at(a, j, k)) add_scaled(rhs, f.at(a, i), *c);
          if (!f.at(a, j).is_zero())
            if (const Vec* c = ix.at(i, a, k)) add_scaled(rhs, f.at(a, j), *c);
          if (!f.at(a, k).is_zero())
            if (const Vec* c = ix.at(i, j, a)) add_scaled(rhs, f.at(a, k), *c);
        }
        if (lhs != rhs) return false;
      }
  return true;
}

bool Algebra3::is_lie3() const {
  if (field().characteristic() == 2)
    throw UnsupportedFieldError("is_lie3 requires characteristic != 2");
  if (!is_valid()) return false;

  // The permutations of S_3 with their signs.
  static constexpr struct { int a, b, c, sign; } kPerms[] = {
      {0, 1, 2, +1}, {1, 2, 0, +1}, {2, 0, 1, +1},
      {0, 2, 1, -1}, {2, 1, 0, -1}, {1, 0, 2, -1},
  };

  const Scalar minus_one = -Scalar::one(field());
  for (const auto& [key, coeffs] : tensor_.entries()) {
    if (key[0] == key[1] || key[1] == key[2] || key[0] == key[2])
      return false;  // alternating brackets vanish on repeated arguments
    for (const auto& perm : kPerms) {
      const std::uint32_t t[3] = {key[perm.a], key[perm.b], key[perm.c]};
      const Vec* other = tensor_.find(t[0], t[1], t[2]);
      if (other == nullptr) return false;  // would need sign * coeffs != 0
      for (std::size_t m = 0; m < dim(); ++m) {
        const Scalar expected =
            perm.sign > 0 ? coeffs[m] : minus_one * coeffs[m];
        if ((*other)[m] != expected) return false;
      }
    }
  }
  return true;
}

}  // namespace leib3
