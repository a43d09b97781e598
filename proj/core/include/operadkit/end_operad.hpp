#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "operadkit/operad.hpp"

namespace operadkit {

/// Free k-module with a named basis e_0, ..., e_{d-1}.
class FiniteModule {
 public:
  /// Labels must be nonempty and pairwise distinct.
  explicit FiniteModule(std::vector<std::string> labels);
  /// Basis labelled "e0", "e1", ...
  static FiniteModule standard(std::size_t dimension);

  std::size_t dimension() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

 private:
  std::vector<std::string> labels_;
};

/// One structure constant: the coefficient of e_output in f(e_{inputs[0]}, ..., e_{inputs[n-1]}).
struct TensorEntry {
  std::vector<std::size_t> inputs;
  std::size_t output = 0;
  Rational value;
};

/// The endomorphism operad End_A(n) = Hom(A^{(x)n}, A) on a finite module.
///
/// Basis of End_A(n): the maps e_{i_1} (x) ... (x) e_{i_n} -> e_k, indexed by
/// k * d^n + (i_1 ... i_n read as a base-d number, i_1 most significant).
class EndOperad final : public Operad {
 public:
  EndOperad(FiniteModule module, std::size_t max_arity);

  const FiniteModule& module() const { return module_; }

  std::string name() const override { return "End_A"; }
  std::size_t dimension(std::size_t arity) const override;
  OperadElement identity() const override;
  std::string describe_basis(std::size_t arity, std::size_t index) const override;

  std::size_t index_of(std::span<const std::size_t> inputs, std::size_t output) const;
  /// Inverse of index_of: fills `inputs` (resized to arity) and returns the output index.
  std::size_t decode(std::size_t arity, std::size_t index, std::vector<std::size_t>& inputs) const;

  /// Builds an arity-n element from structure constants; repeated keys are summed.
  OperadElement element(std::size_t arity, const std::vector<TensorEntry>& entries) const;

  /// Evaluates f on the given arguments (each a coordinate vector in A), multilinearly.
  SparseVector apply(const OperadElement& f, std::span<const SparseVector> args) const;

 protected:
  OperadElement compose_unchecked(const OperadElement& f, std::size_t slot,
                                  const OperadElement& g) const override;

 private:
  std::size_t power(std::size_t exponent) const { return powers_.at(exponent); }

  FiniteModule module_;
  std::vector<std::size_t> powers_;  ///< d^0 .. d^(max_arity + 1)
};

std::shared_ptr<const EndOperad> end_operad(FiniteModule module, std::size_t max_arity);

}  // namespace operadkit
