#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "operadkit/rational.hpp"
#include "operadkit/sparse_vector.hpp"

namespace operadkit {

using Vector = std::vector<Rational>;

/// Sparse exact matrix stored by rows. Unstored entries are zero; the shape is fixed.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_dense(const std::vector<std::vector<Rational>>& rows);
  /// Builds a rows x columns.size() matrix whose j-th column is columns[j].
  static Matrix from_columns(std::size_t rows, const std::vector<SparseVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  void add(std::size_t r, std::size_t c, const Rational& value);

  const SparseVector& row(std::size_t r) const { return data_[r]; }
  void set_row(std::size_t r, SparseVector row);
  SparseVector column(std::size_t c) const;

  std::size_t nonzeros() const;
  bool is_zero() const;

  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  void check_index(std::size_t r, std::size_t c) const;

  std::size_t rows_;
  std::size_t cols_;
  std::vector<SparseVector> data_;
};

/// Fully reduced row echelon form: rows[k] has a leading 1 at pivot_columns[k] and zeros
/// in every other pivot column. Pivot columns are strictly increasing.
struct RowEchelon {
  std::vector<std::size_t> pivot_columns;
  std::vector<SparseVector> rows;
};

RowEchelon reduced_row_echelon(const Matrix& m);

/// Rank over Q by exact sparse Gaussian elimination.
std::size_t rank(const Matrix& m);

/// Rank over Q by dense fraction-free (Bareiss) elimination on the row-scaled integer
/// matrix. Slower; kept as an independent route for cross-checking rank().
std::size_t rank_fraction_free(const Matrix& m);

/// Basis of the null space, one vector per free column; size() == cols - rank.
std::vector<Vector> kernel_basis(const Matrix& m);

struct ImageMembership {
  bool member = false;
  std::optional<Vector> witness;  ///< w with m * w == v, present iff member
  explicit operator bool() const { return member; }
};

/// Decides whether v lies in the column span of m. Throws DimensionMismatch when
/// v.size() != m.rows().
ImageMembership in_image(const Matrix& m, const Vector& v);

inline bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

}  // namespace operadkit
