#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "operadkit/rational.hpp"
#include "operadkit/sparse_vector.hpp"

namespace operadkit {

/// An element of O(arity), as coordinates in the operad's fixed basis of that arity.
struct OperadElement {
  std::size_t arity = 1;
  SparseVector coeffs;

  bool is_zero() const { return coeffs.empty(); }

  OperadElement& operator+=(const OperadElement& other);
  OperadElement& operator-=(const OperadElement& other);
  OperadElement& operator*=(const Rational& s) {
    coeffs *= s;
    return *this;
  }
  friend OperadElement operator+(OperadElement a, const OperadElement& b) { return a += b; }
  friend OperadElement operator-(OperadElement a, const OperadElement& b) { return a -= b; }
  friend OperadElement operator*(const Rational& s, OperadElement a) { return a *= s; }
  friend OperadElement operator-(OperadElement a) { return a *= Rational(-1); }
  friend bool operator==(const OperadElement& a, const OperadElement& b) {
    return a.arity == b.arity && a.coeffs == b.coeffs;
  }
};

/// A nonsymmetric operad presented on a finite arity window [1, max_arity].
///
/// Each arity n carries a finite basis of size dimension(n); elements are coordinate
/// vectors in that basis. Subclasses supply the bilinear partial composition on
/// coordinates and the unit. compose() enforces the window: a result arity beyond
/// max_arity() raises ArityOverflow rather than being truncated.
class Operad {
 public:
  explicit Operad(std::size_t max_arity);
  virtual ~Operad() = default;

  Operad(const Operad&) = delete;
  Operad& operator=(const Operad&) = delete;

  std::size_t max_arity() const { return max_arity_; }

  virtual std::string name() const = 0;
  virtual std::size_t dimension(std::size_t arity) const = 0;
  virtual OperadElement identity() const = 0;
  /// Human-readable name of a basis vector, used in violation witnesses.
  virtual std::string describe_basis(std::size_t arity, std::size_t index) const;

  /// f o_slot g, with slot 1-based. Throws SlotOutOfRange, ArityOverflow, DimensionMismatch.
  OperadElement compose(const OperadElement& f, std::size_t slot, const OperadElement& g) const;

  OperadElement zero(std::size_t arity) const;
  OperadElement basis_element(std::size_t arity, std::size_t index) const;
  /// Throws DimensionMismatch if the element does not belong to O(arity) of this operad.
  void validate(const OperadElement& f) const;
  std::string describe(const OperadElement& f) const;

 protected:
  /// Inputs are validated and the result arity is inside the window.
  virtual OperadElement compose_unchecked(const OperadElement& f, std::size_t slot,
                                          const OperadElement& g) const = 0;

 private:
  std::size_t max_arity_;
};

using OperadPtr = std::shared_ptr<const Operad>;

}  // namespace operadkit
