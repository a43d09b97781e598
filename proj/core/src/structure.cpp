#include "operadkit/structure.hpp"

#include "operadkit/errors.hpp"

namespace operadkit {

namespace {

// sum_i (-1)^{(n-1)(i-1)} f o_i g
OperadElement signed_insertions(const Operad& op, const OperadElement& f, const OperadElement& g) {
  const long long n = static_cast<long long>(g.arity);
  OperadElement sum = op.zero(f.arity + g.arity - 1);
  for (std::size_t i = 1; i <= f.arity; ++i) {
    OperadElement term = op.compose(f, i, g);
    if (sign_power((n - 1) * static_cast<long long>(i - 1)) < 0) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

void require_binary(const OperadElement& pi) {
  if (pi.arity != 2) throw PreconditionFailure("expected an arity-2 element");
}

}  // namespace

OperadElement gerstenhaber_bracket(const Operad& op, const OperadElement& f, const OperadElement& g) {
  const long long m = static_cast<long long>(f.arity);
  const long long n = static_cast<long long>(g.arity);
  OperadElement result = signed_insertions(op, f, g);
  OperadElement other = signed_insertions(op, g, f);
  if (sign_power((m - 1) * (n - 1)) < 0) {
    result += other;
  } else {
    result -= other;
  }
  return result;
}

OperadElement cup_product(const Operad& op, const OperadElement& pi, const OperadElement& f,
                          const OperadElement& g) {
  require_binary(pi);
  const long long m = static_cast<long long>(f.arity);
  const long long n = static_cast<long long>(g.arity);
  OperadElement result = op.compose(op.compose(pi, 2, g), 1, f);
  if (sign_power(m * n + 1) < 0) result *= Rational(-1);
  return result;
}

OperadElement associator(const Operad& op, const OperadElement& pi) {
  require_binary(pi);
  return op.compose(pi, 1, pi) - op.compose(pi, 2, pi);
}

bool is_multiplication(const Operad& op, const OperadElement& pi) { return associator(op, pi).is_zero(); }

}  // namespace operadkit
