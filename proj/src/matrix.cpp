#include "leib3/matrix.hpp"

namespace leib3 {

Vec zero_vec(const FieldSpec& f, std::size_t n) {
  return Vec(n, Scalar::zero(f));
}

Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const Scalar& s : v)
    if (!s.is_zero()) return false;
  return true;
}

void add_scaled(Vec& acc, const Scalar& c, const Vec& v) {
  if (acc.size() != v.size())
    throw UsageError("add_scaled: length mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] += c * v[i];
}

void check_vec(const FieldSpec& f, const Vec& v, std::size_t n, const char* what) {
  if (v.size() != n)
    throw UsageError(std::string(what) + ": expected length " + std::to_string(n) +
                     ", got " + std::to_string(v.size()));
  for (const Scalar& s : v)
    if (s.field() != f)
      throw UsageError(std::string(what) + ": field mismatch (" + s.field().str() +
                       " vs " + f.str() + ")");
}

std::string vec_str(const Vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + "]";
}

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), field_(f),
      entries_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, std::size_t cols,
                         const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    check_vec(f, rows[r], cols, "matrix row");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

bool Matrix::row_is_zero(std::size_t r) const {
  for (std::size_t c = 0; c < cols_; ++c)
    if (!at(r, c).is_zero()) return false;
  return true;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

Vec Matrix::apply(const Vec& v) const {
  check_vec(field_, v, cols_, "matrix apply");
  Vec out = zero_vec(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
         a.entries_ == b.entries_;
}

RrefResult rref_with_pivots(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(pivot_row, sel);

    const Scalar inv = m.at(pivot_row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m.at(pivot_row, c) *= inv;

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m.at(r, col).is_zero()) continue;
      const Scalar factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m.at(r, c) -= factor * m.at(pivot_row, c);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return {std::move(m), std::move(pivots)};
}

Matrix rref(const Matrix& m) { return rref_with_pivots(m).mat; }

std::size_t rank(const Matrix& m) { return rref_with_pivots(m).pivot_cols.size(); }

}  // namespace leib3
