#include "operadkit/operad.hpp"

#include "operadkit/errors.hpp"

namespace operadkit {

OperadElement& OperadElement::operator+=(const OperadElement& other) {
  if (arity != other.arity) throw DimensionMismatch("adding operad elements of different arity");
  coeffs += other.coeffs;
  return *this;
}

OperadElement& OperadElement::operator-=(const OperadElement& other) {
  if (arity != other.arity) throw DimensionMismatch("subtracting operad elements of different arity");
  coeffs -= other.coeffs;
  return *this;
}

Operad::Operad(std::size_t max_arity) : max_arity_(max_arity) {
  if (max_arity < 1) throw std::invalid_argument("operad arity window must contain arity 1");
}

std::string Operad::describe_basis(std::size_t arity, std::size_t index) const {
  return "b" + std::to_string(arity) + "[" + std::to_string(index) + "]";
}

OperadElement Operad::compose(const OperadElement& f, std::size_t slot, const OperadElement& g) const {
  validate(f);
  validate(g);
  if (slot < 1 || slot > f.arity) {
    throw SlotOutOfRange("slot " + std::to_string(slot) + " outside 1.." + std::to_string(f.arity));
  }
  const std::size_t arity = f.arity + g.arity - 1;
  if (arity > max_arity_) {
    throw ArityOverflow(name() + ": composite arity " + std::to_string(arity) +
                        " exceeds the window N_max = " + std::to_string(max_arity_));
  }
  if (f.is_zero() || g.is_zero()) return zero(arity);
  return compose_unchecked(f, slot, g);
}

OperadElement Operad::zero(std::size_t arity) const {
  if (arity < 1 || arity > max_arity_) {
    throw ArityOverflow(name() + ": arity " + std::to_string(arity) + " outside the window");
  }
  return OperadElement{arity, {}};
}

OperadElement Operad::basis_element(std::size_t arity, std::size_t index) const {
  OperadElement e = zero(arity);
  if (index >= dimension(arity)) throw DimensionMismatch("basis index out of range");
  e.coeffs = SparseVector::unit(index);
  return e;
}

void Operad::validate(const OperadElement& f) const {
  if (f.arity < 1 || f.arity > max_arity_) {
    throw ArityOverflow(name() + ": element arity " + std::to_string(f.arity) + " outside the window");
  }
  if (f.coeffs.support_bound() > dimension(f.arity)) {
    throw DimensionMismatch(name() + ": coefficient index beyond dim O(" + std::to_string(f.arity) + ")");
  }
}

std::string Operad::describe(const OperadElement& f) const {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [i, x] : f.coeffs) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(x) + ")*" + describe_basis(f.arity, i);
  }
  return out;
}

}  // namespace operadkit
