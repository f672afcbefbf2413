#pragma once

#include "leib3/matrix.hpp"

namespace leib3 {

/// Subspace of F^n held as a reduced-row-echelon basis with no zero rows.
/// The RREF basis is a canonical form: two subspaces are equal as sets of
/// vectors iff their stored bases are entry-wise identical.
class Subspace {
 public:
  static Subspace zero(const FieldSpec& f, std::size_t ambient);
  static Subspace full(const FieldSpec& f, std::size_t ambient);
  static Subspace span_of(const FieldSpec& f, std::size_t ambient,
                          const std::vector<Vec>& vectors);
  static Subspace row_space(const Matrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t codim() const { return ambient_ - dim(); }
  const FieldSpec& field() const { return basis_.field(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// Canonical representative of v modulo this subspace: v minus the basis
  /// combination matching its pivot coordinates. Zero iff contains(v).
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Non-pivot coordinate indices; the corresponding standard basis vectors
  /// span a canonical complement.
  std::vector<std::size_t> complement_coords() const;

  friend Subspace sum(const Subspace& u, const Subspace& w);
  friend Subspace intersect(const Subspace& u, const Subspace& w);

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_;
  Matrix basis_;                      // RREF, no zero rows
  std::vector<std::size_t> pivots_;  // pivot column of each basis row
};

/// Null space {v : m v = 0}, canonical; dim = cols - rank (rank-nullity).
Subspace kernel(const Matrix& m);

}  // namespace leib3
