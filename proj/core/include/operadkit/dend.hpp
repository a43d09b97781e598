#pragma once

#include <array>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "operadkit/morphism.hpp"
#include "operadkit/operad.hpp"

namespace operadkit {

/// The label [value] in C_ambient = {[1], ..., [ambient]}.
struct BoxIndex {
  std::size_t value = 1;
  std::size_t ambient = 1;
  friend bool operator==(const BoxIndex&, const BoxIndex&) = default;
};

/// A sum of distinct labels of one C_ambient, each with coefficient 1.
struct FormalSum {
  std::vector<std::size_t> values;
  std::size_t ambient = 1;
  static FormalSum all(std::size_t ambient);
  friend bool operator==(const FormalSum&, const FormalSum&) = default;
};

using BoxOrSum = std::variant<BoxIndex, FormalSum>;

/// Inserting n elements into box i of m boxes (all other boxes hold one element):
/// r0_map gives the box of C_m containing element [r] of C_{m+n-1}.
/// Throws std::out_of_range unless m, n >= 1, 1 <= i <= m, 1 <= r <= m+n-1.
BoxIndex r0_map(std::size_t m, std::size_t n, std::size_t i, std::size_t r);

/// [r-i+1] in C_n when [r] lies in box i, otherwise [1] + ... + [n].
BoxOrSum ri_map(std::size_t m, std::size_t n, std::size_t i, std::size_t r);

/// O^Dend(n) = k[C_n] (x) O(n), with (f o_i g)^[r] = f^{R0[r]} o_i g^{Ri[r]}.
///
/// Coordinates as for O^comp: component [r] occupies [(r-1) dim O(n), r dim O(n)).
class DendOperad final : public Operad {
 public:
  explicit DendOperad(OperadPtr base);

  const Operad& base() const { return *base_; }
  const OperadPtr& base_ptr() const { return base_; }

  std::string name() const override { return base_->name() + "^Dend"; }
  std::size_t dimension(std::size_t arity) const override { return arity * base_->dimension(arity); }
  OperadElement identity() const override;
  std::string describe_basis(std::size_t arity, std::size_t index) const override;

  OperadElement pack(const std::vector<OperadElement>& components) const;
  OperadElement component(const OperadElement& f, std::size_t r) const;
  std::vector<OperadElement> components(const OperadElement& f) const;
  /// f evaluated at a formal sum: the sum of the named components.
  OperadElement evaluate(const std::vector<OperadElement>& components, const BoxOrSum& at) const;

 protected:
  OperadElement compose_unchecked(const OperadElement& f, std::size_t slot,
                                  const OperadElement& g) const override;

 private:
  OperadPtr base_;
};

std::shared_ptr<const DendOperad> dend_operad(OperadPtr base);

/// The three dendriform defects, zero iff (prec, succ) is a dendriform-multiplication:
///   prec o_1 prec - prec o_2 (prec + succ),
///   prec o_1 succ - succ o_2 prec,
///   succ o_1 (prec + succ) - succ o_2 succ.
std::array<OperadElement, 3> dendriform_defects(const Operad& base, const OperadElement& prec,
                                                const OperadElement& succ);
bool is_dendriform_multiplication(const Operad& base, const OperadElement& prec, const OperadElement& succ);

/// (pi o_2 R) o_1 R = R o_1 (pi o_1 R + pi o_2 R + weight * pi). Weight 0 is the usual
/// Rota-Baxter identity; nonzero weights feed the tridendriform splitting.
/// Throws PreconditionFailure on wrong arities or if pi is not a multiplication.
bool is_rota_baxter_element(const Operad& base, const OperadElement& pi, const OperadElement& R,
                            const Rational& weight = 0);

/// (pi o_2 R, pi o_1 R). Throws PreconditionFailure unless R is Rota-Baxter of weight 0.
std::pair<OperadElement, OperadElement> split_by_rota_baxter(const Operad& base, const OperadElement& pi,
                                                             const OperadElement& R);

struct TriDendTriple {
  OperadElement prec;
  OperadElement succ;
  OperadElement odot;
};

/// The seven tridendriform identities; the unlabelled composition in the second is read as o_1.
std::array<OperadElement, 7> tridendriform_defects(const Operad& base, const TriDendTriple& t);
bool is_tridendriform_multiplication(const Operad& base, const TriDendTriple& t);

/// (prec + odot, succ). Throws PreconditionFailure unless `t` is tridendriform.
std::pair<OperadElement, OperadElement> tridend_to_dend(const Operad& base, const TriDendTriple& t);

/// (pi o_2 R, pi o_1 R, weight * pi) for a Rota-Baxter element of the given weight.
/// Throws PreconditionFailure otherwise.
TriDendTriple tridend_from_rota_baxter(const Operad& base, const OperadElement& pi, const OperadElement& R,
                                       const Rational& weight);

/// phi_n(f) = f^[1] + ... + f^[n].
OperadMorphism total_morphism(std::shared_ptr<const DendOperad> dend);

}  // namespace operadkit
