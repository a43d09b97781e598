#include "operadkit/matrix.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "operadkit/errors.hpp"

namespace operadkit {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i] = SparseVector::unit(i);
  return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged rows in Matrix::from_dense");
    m.data_[r] = SparseVector::from_dense(rows[r]);
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<SparseVector>& columns) {
  std::vector<std::vector<SparseVector::Entry>> by_row(rows);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [r, x] : columns[c]) {
      if (r >= rows) throw DimensionMismatch("column entry outside the row range");
      by_row[r].emplace_back(c, x);
    }
  }
  Matrix m(rows, columns.size());
  for (std::size_t r = 0; r < rows; ++r) m.data_[r] = SparseVector::from_entries(std::move(by_row[r]));
  return m;
}

void Matrix::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw DimensionMismatch("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                            ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

Rational Matrix::get(std::size_t r, std::size_t c) const {
  check_index(r, c);
  return data_[r].get(c);
}

void Matrix::set(std::size_t r, std::size_t c, const Rational& value) {
  check_index(r, c);
  data_[r].axpy(Rational(1), SparseVector::unit(c, value - data_[r].get(c)));
}

void Matrix::add(std::size_t r, std::size_t c, const Rational& value) {
  check_index(r, c);
  data_[r].axpy(Rational(1), SparseVector::unit(c, value));
}

void Matrix::set_row(std::size_t r, SparseVector row) {
  if (r >= rows_ || row.support_bound() > cols_) throw DimensionMismatch("row does not fit the matrix");
  data_[r] = std::move(row);
}

SparseVector Matrix::column(std::size_t c) const {
  if (c >= cols_) throw DimensionMismatch("column index out of range");
  std::vector<SparseVector::Entry> entries;
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational x = data_[r].get(c);
    if (sgn(x) != 0) entries.emplace_back(r, std::move(x));
  }
  return SparseVector::from_entries(std::move(entries));
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.nonzeros();
  return n;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SparseVector& r) { return r.empty(); });
}

Matrix Matrix::transpose() const {
  std::vector<std::vector<SparseVector::Entry>> cols(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, x] : data_[r]) cols[c].emplace_back(r, x);
  }
  Matrix t(cols_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) t.data_[c] = SparseVector::from_entries(std::move(cols[c]));
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("vector length does not match matrix columns");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, x] : data_[r]) out[r] += x * v[c];
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    SparseVector acc;
    for (const auto& [k, x] : a.data_[r]) acc.axpy(x, b.data_[k]);
    out.data_[r] = std::move(acc);
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows_; ++r) out.data_[r] -= b.data_[r];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RowEchelon reduced_row_echelon(const Matrix& m) {
  // Forward pass: insert each row into an echelon basis keyed by leading column.
  std::map<std::size_t, SparseVector> pivots;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVector v = m.row(r);
    while (!v.empty()) {
      const std::size_t lead = v.leading_index();
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        const Rational inv = 1 / v.leading_value();
        v *= inv;
        pivots.emplace(lead, std::move(v));
        break;
      }
      const Rational factor = -v.leading_value();
      v.axpy(factor, it->second);
    }
  }
  // Backward pass: clear each pivot column above its pivot, highest column first.
  for (auto p = pivots.rbegin(); p != pivots.rend(); ++p) {
    const std::size_t col = p->first;
    for (auto q = pivots.begin(); q != pivots.end() && q->first < col; ++q) {
      const Rational x = q->second.get(col);
      if (sgn(x) != 0) q->second.axpy(-x, p->second);
    }
  }
  RowEchelon out;
  out.pivot_columns.reserve(pivots.size());
  out.rows.reserve(pivots.size());
  for (auto& [col, row] : pivots) {
    out.pivot_columns.push_back(col);
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::size_t rank(const Matrix& m) { return reduced_row_echelon(m).pivot_columns.size(); }

std::size_t rank_fraction_free(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class scale = 1;
    for (const auto& [c, x] : m.row(r)) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
    for (const auto& [c, x] : m.row(r)) a[r][c] = x.get_num() * (scale / x.get_den());
  }
  mpz_class previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), previous.get_mpz_t());
      }
      a[i][c] = 0;
    }
    previous = a[r][c];
    ++r;
  }
  return r;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const RowEchelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < e.rows.size(); ++k) v[e.pivot_columns[k]] = -e.rows[k].get(free);
    basis.push_back(std::move(v));
  }
  return basis;
}

ImageMembership in_image(const Matrix& m, const Vector& v) {
  if (v.size() != m.rows()) {
    throw DimensionMismatch("in_image: vector of length " + std::to_string(v.size()) +
                            " against a matrix with " + std::to_string(m.rows()) + " rows");
  }
  Matrix augmented(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVector row = m.row(r);
    row.axpy(Rational(1), SparseVector::unit(m.cols(), v[r]));
    augmented.set_row(r, std::move(row));
  }
  const RowEchelon e = reduced_row_echelon(augmented);
  ImageMembership result;
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == m.cols()) return result;
  Vector w(m.cols());
  for (std::size_t k = 0; k < e.rows.size(); ++k) w[e.pivot_columns[k]] = e.rows[k].get(m.cols());
  result.member = true;
  result.witness = std::move(w);
  return result;
}

}  // namespace operadkit
