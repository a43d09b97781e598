#pragma once

#include <span>
#include <string>
#include <vector>

#include "operadkit/sparse_vector.hpp"

namespace operadkit {

/// A finite free graded module: basis element i has degree degree(i).
class GradedModule {
 public:
  static constexpr int kMinDegree = -2;
  static constexpr int kMaxDegree = 4;

  /// Throws std::invalid_argument on size mismatch, repeated labels, or degrees outside
  /// [kMinDegree, kMaxDegree].
  GradedModule(std::vector<std::string> labels, std::vector<int> degrees);
  /// Everything in degree 0.
  static GradedModule concentrated(std::vector<std::string> labels);

  std::size_t dimension() const { return labels_.size(); }
  int degree(std::size_t i) const { return degrees_.at(i); }
  const std::vector<int>& degrees() const { return degrees_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  bool is_concentrated_in_degree_zero() const;

 private:
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
};

/// A k-linear map A^{(x)k} -> A stored as a table: basis tuple -> image vector.
class MultilinearMap {
 public:
  MultilinearMap(std::size_t arity, std::size_t dimension);

  std::size_t arity() const { return arity_; }
  std::size_t dimension() const { return dimension_; }

  /// Adds value * e_output to the image of the basis tuple.
  void add(std::span<const std::size_t> inputs, std::size_t output, const Rational& value);
  const SparseVector& on_basis(std::span<const std::size_t> inputs) const { return table_[tuple(inputs)]; }
  SparseVector& on_basis_mut(std::span<const std::size_t> inputs) { return table_[tuple(inputs)]; }
  SparseVector apply(std::span<const SparseVector> args) const;

  bool is_zero() const;
  /// Throws DegreeError unless every structure constant raises degree by exactly `degree`.
  void require_degree(const GradedModule& module, int degree, const std::string& what) const;

  MultilinearMap& operator+=(const MultilinearMap& other);
  friend bool operator==(const MultilinearMap& a, const MultilinearMap& b) {
    return a.arity_ == b.arity_ && a.dimension_ == b.dimension_ && a.table_ == b.table_;
  }
  /// Calls visit(inputs, image) for every basis tuple with a nonzero image, in lexicographic order.
  template <typename Visit>
  void for_each(Visit&& visit) const {
    std::vector<std::size_t> in(arity_);
    for (std::size_t t = 0; t < table_.size(); ++t) {
      if (table_[t].empty()) continue;
      decode(t, in);
      visit(std::span<const std::size_t>(in), table_[t]);
    }
  }

 private:
  std::size_t tuple(std::span<const std::size_t> inputs) const;
  void decode(std::size_t t, std::vector<std::size_t>& inputs) const;

  std::size_t arity_;
  std::size_t dimension_;
  std::vector<SparseVector> table_;
};

}  // namespace operadkit
