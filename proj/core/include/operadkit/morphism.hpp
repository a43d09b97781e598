#pragma once

#include <functional>
#include <string>

#include "operadkit/matrix.hpp"
#include "operadkit/operad.hpp"
#include "operadkit/report.hpp"
#include "operadkit/sampling.hpp"

namespace operadkit {

/// A family of linear maps phi_n : O(n) -> O'(n). The map is supplied on elements and is
/// expected to be linear; check_morphism tests that too.
struct OperadMorphism {
  OperadPtr source;
  OperadPtr target;
  std::function<OperadElement(const OperadElement&)> map;
  std::string name;

  OperadElement operator()(const OperadElement& f) const { return map(f); }
  /// Matrix of phi_n in the two bases (columns are images of source basis vectors).
  Matrix matrix(std::size_t arity) const;
};

OperadMorphism identity_morphism(OperadPtr op);

/// Checks phi_1(1) = 1', phi(f o_i g) = phi(f) o'_i phi(g) for all arities with composite
/// arity <= arity_cap, and additivity phi(f + c g) = phi(f) + c phi(g) on random pairs.
CheckReport check_morphism(const OperadMorphism& phi, std::size_t arity_cap, const SamplingPolicy& policy = {});

}  // namespace operadkit
