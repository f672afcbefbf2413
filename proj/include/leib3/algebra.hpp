#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <map>
#include <vector>

#include "leib3/matrix.hpp"

namespace leib3 {

using BasisTriple = std::array<std::uint32_t, 3>;

/// Sparse structure constants of a trilinear bracket on a basis of F^n:
/// the entry at (i,j,k) is the coordinate vector of [e_i,e_j,e_k].
/// Absent triples mean the zero bracket; all-zero vectors are never stored,
/// so equal tensors have identical entry maps.
class StructureTensor {
 public:
  StructureTensor(const FieldSpec& f, std::size_t dim)
      : field_(f), dim_(dim) {}

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }

  /// Sets [e_i,e_j,e_k] = value; a zero value erases the entry.
  void set(std::size_t i, std::size_t j, std::size_t k, Vec value);
  /// nullptr when the bracket of (i,j,k) is zero.
  const Vec* find(std::size_t i, std::size_t j, std::size_t k) const;

  const std::map<BasisTriple, Vec>& entries() const { return entries_; }
  std::size_t entry_count() const { return entries_.size(); }

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const StructureTensor& a, const StructureTensor& b) {
    return !(a == b);
  }

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::map<BasisTriple, Vec> entries_;  // lexicographic (i,j,k)
};

/// One failed instance of the left Leibniz 3-identity on basis vectors:
/// at (p,q,i,j,k), defect = [e_p,e_q,[e_i,e_j,e_k]]
///   - [[e_p,e_q,e_i],e_j,e_k] - [e_i,[e_p,e_q,e_j],e_k] - [e_i,e_j,[e_p,e_q,e_k]].
struct Violation {
  std::array<std::uint32_t, 5> quintuple;  // (p,q,i,j,k)
  Vec defect;                              // nonzero
};

/// A Leibniz 3-algebra candidate: a field, structure constants, and a cached
/// tri-state verdict of the left Leibniz 3-identity check.
class Algebra3 {
 public:
  enum class Validity : int { unknown = 0, valid = 1, invalid = 2 };

  explicit Algebra3(StructureTensor tensor);

  std::size_t dim() const { return tensor_.dim(); }
  const FieldSpec& field() const { return tensor_.field(); }
  const StructureTensor& tensor() const { return tensor_; }

  /// Tensor mutation; resets the cached validity to unknown.
  void set_bracket(std::size_t i, std::size_t j, std::size_t k, Vec value);

  Validity validity() const { return validity_.load(std::memory_order_relaxed); }
  /// Validates first if the cached verdict is unknown.
  bool is_valid() const;

  /// Checks the left Leibniz 3-identity on all dim^5 basis quintuples
  /// (sufficient by multilinearity). Scans everything, reports at most
  /// max_reports violations in lexicographic quintuple order, and updates
  /// the cached verdict. Parallelized over quintuple ranges; the output is
  /// identical to validate_serial regardless of thread count.
  std::vector<Violation> validate(std::size_t max_reports = 100) const;
  /// Serial reference implementation of the same scan.
  std::vector<Violation> validate_serial(std::size_t max_reports = 100) const;
  /// Fast-fail scan used by the enumeration inner loop; updates the cache.
  bool has_defect_fast() const;

  /// Trilinear extension of the structure constants.
  Vec bracket(const Vec& x, const Vec& y, const Vec& z) const;
  /// Matrix of x -> [u,v,x] in the standard basis; column k is [u,v,e_k].
  Matrix left_mult_matrix(const Vec& u, const Vec& v) const;
  /// Derivation identity f([a,b,c]) = [f a,b,c]+[a,f b,c]+[a,b,f c] on all
  /// basis triples (sufficient by trilinearity).
  bool is_derivation(const Matrix& f) const;
  /// Antisymmetry under all of S_3 with sign, alternating on repeated
  /// indices. Requires characteristic != 2 and a validated algebra.
  bool is_lie3() const;

  Algebra3(const Algebra3& o) : tensor_(o.tensor_), validity_(o.validity()) {}
  Algebra3(Algebra3&& o) noexcept
      : tensor_(std::move(o.tensor_)), validity_(o.validity()) {}
  Algebra3& operator=(const Algebra3& o);
  Algebra3& operator=(Algebra3&& o) noexcept;

 private:
  struct DenseIndex;  // per-scan pointer table into the sparse tensor

  Vec quintuple_defect(const DenseIndex& ix, std::uint32_t p, std::uint32_t q,
                       std::uint32_t i, std::uint32_t j, std::uint32_t k) const;
  std::vector<Violation> scan_range(const DenseIndex& ix, std::uint64_t begin,
                                    std::uint64_t end, std::size_t max_reports,
                                    std::uint64_t& defect_count) const;

  StructureTensor tensor_;
  mutable std::atomic<Validity> validity_{Validity::unknown};
};

}  // namespace leib3
