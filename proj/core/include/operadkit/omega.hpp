#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "operadkit/dend.hpp"
#include "operadkit/operad.hpp"
#include "operadkit/semigroup.hpp"

namespace operadkit {

/// Index of a tuple over {0..base-1}, first entry most significant.
std::size_t tuple_index(std::span<const std::size_t> xs, std::size_t base);
void tuple_decode(std::size_t index, std::size_t length, std::size_t base, std::vector<std::size_t>& out);
std::size_t int_power(std::size_t base, std::size_t exponent);

/// O^Omega(n) = k[Omega^n] (x) O(n): a family f_{a_1..a_n} of elements of O(n), composed by
///   (f o_i g)_{a_1..a_{m+n-1}} = f_{a_1, .., a_i ... a_{i+n-1}, .., a_{m+n-1}} o_i g_{a_i..a_{i+n-1}}.
///
/// Coordinates: block for tuple t occupies [t * dim O(n), (t+1) * dim O(n)).
class OmegaOperad final : public Operad {
 public:
  /// Throws PreconditionFailure if `omega` is not associative.
  OmegaOperad(OperadPtr base, Semigroup omega);

  const Operad& base() const { return *base_; }
  const OperadPtr& base_ptr() const { return base_; }
  const Semigroup& semigroup() const { return omega_; }

  std::string name() const override { return base_->name() + "^Omega"; }
  std::size_t dimension(std::size_t arity) const override;
  OperadElement identity() const override;
  std::string describe_basis(std::size_t arity, std::size_t index) const override;

  /// Builds the family alpha -> family(alpha) of arity-n elements.
  OperadElement from_family(std::size_t arity,
                            const std::function<OperadElement(std::span<const std::size_t>)>& family) const;
  OperadElement block(const OperadElement& f, std::span<const std::size_t> alpha) const;

 protected:
  OperadElement compose_unchecked(const OperadElement& f, std::size_t slot,
                                  const OperadElement& g) const override;

 private:
  OperadPtr base_;
  Semigroup omega_;
};

std::shared_ptr<const OmegaOperad> omega_operad(OperadPtr base, Semigroup omega);

/// Fam(O^Omega)^Dend: the suboperad of (O^Omega)^Dend of elements whose component [r] does
/// not depend on alpha_r.
///
/// Component [r] of an arity-n element is stored as a family over Omega^{n-1} (alpha with
/// alpha_r removed), so slot independence holds by representation. Coordinates:
/// ((r-1) |Omega|^{n-1} + reduced tuple) * dim O(n) + base index. Compositions are computed
/// in (O^Omega)^Dend and projected back; the projection verifies closure and throws
/// std::logic_error if a composite ever depended on an omitted slot.
class FamDendOperad final : public Operad {
 public:
  FamDendOperad(OperadPtr base, Semigroup omega);

  const Operad& base() const { return omega_->base(); }
  const Semigroup& semigroup() const { return omega_->semigroup(); }
  const OmegaOperad& omega_operad() const { return *omega_; }
  const DendOperad& ambient() const { return *ambient_; }

  std::string name() const override { return "Fam(" + omega_->name() + ")^Dend"; }
  std::size_t dimension(std::size_t arity) const override;
  OperadElement identity() const override;
  std::string describe_basis(std::size_t arity, std::size_t index) const override;

  /// Component [r] given as a function of the reduced tuple (alpha without alpha_r).
  using ComponentFamily = std::function<OperadElement(std::size_t r, std::span<const std::size_t> reduced)>;
  OperadElement from_components(std::size_t arity, const ComponentFamily& family) const;
  /// f^[r] at the reduced tuple.
  OperadElement component(const OperadElement& f, std::size_t r, std::span<const std::size_t> reduced) const;

  OperadElement embed(const OperadElement& f) const;
  /// Inverse of embed on its image; throws std::logic_error if `x` is not slot independent.
  OperadElement project(const OperadElement& x) const;

 protected:
  OperadElement compose_unchecked(const OperadElement& f, std::size_t slot,
                                  const OperadElement& g) const override;

 private:
  std::shared_ptr<const OmegaOperad> omega_;
  std::shared_ptr<const DendOperad> ambient_;
};

std::shared_ptr<const FamDendOperad> fam_dend_operad(OperadPtr base, Semigroup omega);

}  // namespace operadkit
