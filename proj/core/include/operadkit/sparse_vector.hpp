#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "operadkit/rational.hpp"

namespace operadkit {

/// Sorted (index, value) list with no stored zeros.
///
/// This is the coefficient carrier for operad elements and matrix rows: compositions of
/// basis elements touch few coordinates, so everything downstream stays sparse.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVector() = default;

  static SparseVector unit(std::size_t index, const Rational& value = 1);
  /// Sorts, sums duplicate indices, and drops zeros.
  static SparseVector from_entries(std::vector<Entry> entries);
  static SparseVector from_dense(const std::vector<Rational>& dense);

  bool empty() const { return entries_.empty(); }
  std::size_t nonzeros() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Rational get(std::size_t index) const;
  /// Smallest stored index; undefined on the empty vector.
  std::size_t leading_index() const { return entries_.front().first; }
  const Rational& leading_value() const { return entries_.front().second; }
  /// One past the largest stored index (0 when empty).
  std::size_t support_bound() const { return entries_.empty() ? 0 : entries_.back().first + 1; }

  std::vector<Rational> to_dense(std::size_t length) const;

  /// this += factor * other
  void axpy(const Rational& factor, const SparseVector& other);

  SparseVector& operator+=(const SparseVector& other);
  SparseVector& operator-=(const SparseVector& other);
  SparseVector& operator*=(const Rational& factor);

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const Rational& s, SparseVector a) { return a *= s; }
  friend SparseVector operator-(SparseVector a) { return a *= Rational(-1); }
  friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Entry> entries_;
};

}  // namespace operadkit
