#include "leib3/subspace.hpp"

namespace leib3 {

namespace {

void require_compatible(const Subspace& a, const Subspace& b, const char* what) {
  if (a.ambient_dim() != b.ambient_dim())
    throw UsageError(std::string(what) + ": ambient dimension mismatch (" +
                     std::to_string(a.ambient_dim()) + " vs " +
                     std::to_string(b.ambient_dim()) + ")");
  if (a.field() != b.field())
    throw UsageError(std::string(what) + ": field mismatch (" + a.field().str() +
                     " vs " + b.field().str() + ")");
}

}  // namespace

Subspace Subspace::zero(const FieldSpec& f, std::size_t ambient) {
  return Subspace(ambient, Matrix(f, 0, ambient), {});
}

Subspace Subspace::full(const FieldSpec& f, std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(ambient, Matrix::identity(f, ambient), std::move(pivots));
}

Subspace Subspace::row_space(const Matrix& m) {
  RrefResult r = rref_with_pivots(m);
  const std::size_t d = r.pivot_cols.size();
  Matrix basis(m.field(), d, m.cols());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) basis.at(i, c) = r.mat.at(i, c);
  return Subspace(m.cols(), std::move(basis), std::move(r.pivot_cols));
}

Subspace Subspace::span_of(const FieldSpec& f, std::size_t ambient,
                           const std::vector<Vec>& vectors) {
  return row_space(Matrix::from_rows(f, ambient, vectors));
}

Vec Subspace::reduce(Vec v) const {
  check_vec(field(), v, ambient_, "subspace reduce");
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Scalar& coeff = v[pivots_[r]];
    if (coeff.is_zero()) continue;
    const Scalar c = coeff;  // copy; v[pivot] is overwritten below
    for (std::size_t j = 0; j < ambient_; ++j) v[j] -= c * basis_.at(r, j);
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_compatible(*this, other, "subspace contains");
  for (std::size_t r = 0; r < other.basis_.rows(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

std::vector<std::size_t> Subspace::complement_coords() const {
  std::vector<std::size_t> out;
  out.reserve(codim());
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (next_pivot < pivots_.size() && pivots_[next_pivot] == c)
      ++next_pivot;
    else
      out.push_back(c);
  }
  return out;
}

Subspace sum(const Subspace& u, const Subspace& w) {
  require_compatible(u, w, "subspace sum");
  std::vector<Vec> rows;
  rows.reserve(u.dim() + w.dim());
  for (std::size_t r = 0; r < u.dim(); ++r) rows.push_back(u.basis_.row(r));
  for (std::size_t r = 0; r < w.dim(); ++r) rows.push_back(w.basis_.row(r));
  return Subspace::span_of(u.field(), u.ambient_dim(), rows);
}

// Intersection via the kernel of a stacked system: (a, b) with
// a^T U = b^T W gives the common vector a^T U.
Subspace intersect(const Subspace& u, const Subspace& w) {
  require_compatible(u, w, "subspace intersect");
  const FieldSpec& f = u.field();
  const std::size_t n = u.ambient_dim();
  const std::size_t du = u.dim(), dw = w.dim();
  if (du == 0 || dw == 0) return Subspace::zero(f, n);

  Matrix stacked(f, n, du + dw);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < du; ++r) stacked.at(c, r) = u.basis_.at(r, c);
    for (std::size_t r = 0; r < dw; ++r) stacked.at(c, du + r) = -w.basis_.at(r, c);
  }
  Subspace pairs = kernel(stacked);

  std::vector<Vec> vectors;
  vectors.reserve(pairs.dim());
  for (std::size_t r = 0; r < pairs.dim(); ++r) {
    Vec x = zero_vec(f, n);
    for (std::size_t i = 0; i < du; ++i)
      add_scaled(x, pairs.basis().at(r, i), u.basis_.row(i));
    vectors.push_back(std::move(x));
  }
  return Subspace::span_of(f, n, vectors);
}

Subspace kernel(const Matrix& m) {
  RrefResult r = rref_with_pivots(m);
  const std::size_t n = m.cols();
  const FieldSpec& f = m.field();

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

  std::vector<Vec> basis;
  basis.reserve(n - r.pivot_cols.size());
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(f, n);
    v[free] = Scalar::one(f);
    for (std::size_t row = 0; row < r.pivot_cols.size(); ++row)
      v[r.pivot_cols[row]] = -r.mat.at(row, free);
    basis.push_back(std::move(v));
  }
  // Canonicalize: the free-coordinate basis is not RREF in general.
  return Subspace::span_of(f, n, basis);
}

}  // namespace leib3
