#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "leib3/field.hpp"

namespace leib3 {

/// Coordinate vector; all entries must share one field.
using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldSpec& f, std::size_t n);
Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
/// acc += c * v
void add_scaled(Vec& acc, const Scalar& c, const Vec& v);
/// Throws UsageError unless v has length n over field f.
void check_vec(const FieldSpec& f, const Vec& v, std::size_t n, const char* what);
std::string vec_str(const Vec& v);  // "[a, b, c]" for messages

/// Dense row-major matrix of exact scalars over one field.
class Matrix {
 public:
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix from_rows(const FieldSpec& f, std::size_t cols,
                          const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  Vec row(std::size_t r) const;
  bool row_is_zero(std::size_t r) const;
  void swap_rows(std::size_t a, std::size_t b);

  /// Matrix-vector product (v of length cols()).
  Vec apply(const Vec& v) const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_, cols_;
  FieldSpec field_;
  std::vector<Scalar> entries_;
};

struct RrefResult {
  Matrix mat;
  std::vector<std::size_t> pivot_cols;  // ascending
};

/// Reduced row echelon form (Gauss-Jordan, exact). Idempotent, preserves the
/// row space.
RrefResult rref_with_pivots(Matrix m);
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

}  // namespace leib3
