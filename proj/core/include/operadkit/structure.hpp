#pragma once

#include "operadkit/operad.hpp"

namespace operadkit {

/// The degree -1 bracket on O(*)[1]: for f in O(m), g in O(n),
///   [[f,g]] = sum_i (-1)^{(n-1)(i-1)} f o_i g - (-1)^{(m-1)(n-1)} sum_i (-1)^{(m-1)(i-1)} g o_i f.
OperadElement gerstenhaber_bracket(const Operad& op, const OperadElement& f, const OperadElement& g);

/// f u g = (-1)^{mn+1} (pi o_2 g) o_1 f. Throws PreconditionFailure unless pi has arity 2;
/// the caller is responsible for pi being a multiplication.
OperadElement cup_product(const Operad& op, const OperadElement& pi, const OperadElement& f,
                          const OperadElement& g);

/// pi o_1 pi - pi o_2 pi. Throws PreconditionFailure unless arity(pi) == 2.
OperadElement associator(const Operad& op, const OperadElement& pi);

bool is_multiplication(const Operad& op, const OperadElement& pi);

/// delta_pi(f) = [[pi, f]].
inline OperadElement differential(const Operad& op, const OperadElement& pi, const OperadElement& f) {
  return gerstenhaber_bracket(op, pi, f);
}

}  // namespace operadkit
