#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace operadkit {

/// A finite magma given by its table; associativity is checked by validate(), not assumed.
/// Elements are referred to by index into labels().
class Semigroup {
 public:
  /// Throws std::invalid_argument if the table is not |labels| x |labels| or names an
  /// unknown element, or if labels repeat.
  Semigroup(std::vector<std::string> labels, const std::vector<std::vector<std::string>>& table);
  Semigroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table);

  static Semigroup singleton();
  /// a * b = a.
  static Semigroup left_zero(std::size_t order);
  /// {0, 1} with a * b = min(a, b); this is also Z/2 under multiplication.
  static Semigroup min_semilattice();
  /// Z/n under addition.
  static Semigroup cyclic_group(std::size_t order);

  std::size_t order() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t a) const { return labels_.at(a); }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
  /// Product of a nonempty tuple, left to right.
  std::size_t product(std::span<const std::size_t> xs) const;

  /// True iff (ab)c = a(bc) for all triples.
  bool is_associative() const;
  std::string describe_tuple(std::span<const std::size_t> xs) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> table_;
};

/// Table-level check for a semigroup given by labels; throws std::invalid_argument on
/// unknown labels or a non-square table and returns whether the operation is associative.
bool validate_semigroup(const std::vector<std::string>& labels, const std::vector<std::vector<std::string>>& table);

}  // namespace operadkit
