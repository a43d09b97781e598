#pragma once

#include <memory>
#include <vector>

#include "operadkit/morphism.hpp"
#include "operadkit/operad.hpp"

namespace operadkit {

/// O^comp(n) = O(n)^{(+)n}, with (f o_i g)_k = sum_{r+s=k+1} f_r o_i g_s.
///
/// Coordinates: component k (1-based) occupies indices [(k-1) * dim O(n), k * dim O(n)).
class CompOperad final : public Operad {
 public:
  explicit CompOperad(OperadPtr base);

  const Operad& base() const { return *base_; }
  const OperadPtr& base_ptr() const { return base_; }

  std::string name() const override { return base_->name() + "^comp"; }
  std::size_t dimension(std::size_t arity) const override { return arity * base_->dimension(arity); }
  OperadElement identity() const override;
  std::string describe_basis(std::size_t arity, std::size_t index) const override;

  /// Throws DimensionMismatch unless there are exactly `arity` components of that arity.
  OperadElement pack(const std::vector<OperadElement>& components) const;
  /// Component k, 1 <= k <= arity.
  OperadElement component(const OperadElement& f, std::size_t k) const;
  std::vector<OperadElement> components(const OperadElement& f) const;

 protected:
  OperadElement compose_unchecked(const OperadElement& f, std::size_t slot,
                                  const OperadElement& g) const override;

 private:
  OperadPtr base_;
};

std::shared_ptr<const CompOperad> comp_operad(OperadPtr base);

/// Both are multiplications and [[pi1, pi2]] = 0.
bool is_compatible_pair(const Operad& base, const OperadElement& pi1, const OperadElement& pi2);

/// The relaxed condition alone: pi1 o_1 pi2 + pi2 o_1 pi1 - pi1 o_2 pi2 - pi2 o_2 pi1 (which is
/// [[pi1, pi2]] in arity 2). Zero iff the cross terms of (pi1 + pi2) associate.
OperadElement compatibility_defect(const Operad& base, const OperadElement& pi1, const OperadElement& pi2);

struct CompEquivalence {
  bool multiplication_in_comp = false;  ///< (pi1, pi2) is a multiplication in O^comp
  bool compatible = false;              ///< is_compatible_pair(pi1, pi2)
  bool expansion_matches = false;       ///< associator in O^comp equals the componentwise expansion
  bool agree() const { return expansion_matches && multiplication_in_comp == compatible; }
};

/// Decides both sides of "(pi1, pi2) is a multiplication in O^comp iff the pair is compatible",
/// and checks the three associator components against
///   (pi1 o_1 pi1 - pi1 o_2 pi1, defect(pi1, pi2), pi2 o_1 pi2 - pi2 o_2 pi2).
CompEquivalence comp_multiplication_equivalence(const CompOperad& comp, const OperadElement& pi1,
                                                const OperadElement& pi2);

/// Closed forms of the bracket, differential and cup product on O^comp in terms of the base
/// operad; used to cross-check the generic constructions.
OperadElement comp_bracket_closed(const CompOperad& comp, const OperadElement& f, const OperadElement& g);
OperadElement comp_differential_closed(const CompOperad& comp, const OperadElement& pi1,
                                       const OperadElement& pi2, const OperadElement& f);
OperadElement comp_cup_closed(const CompOperad& comp, const OperadElement& pi1, const OperadElement& pi2,
                              const OperadElement& f, const OperadElement& g);

/// phi_n(f_1, ..., f_n) = f_1 + ... + f_n.
OperadMorphism sum_morphism(std::shared_ptr<const CompOperad> comp);

}  // namespace operadkit
