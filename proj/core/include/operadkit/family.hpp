#pragma once

#include <memory>
#include <vector>

#include "operadkit/end_operad.hpp"
#include "operadkit/omega.hpp"
#include "operadkit/report.hpp"
#include "operadkit/semigroup.hpp"

namespace operadkit {

/// Operations {prec_a, succ_a}_{a in Omega} on A, each an element of End_A(2).
struct DendFamily {
  std::vector<OperadElement> prec;
  std::vector<OperadElement> succ;
};

/// Products {dot_{a,b}}: dot[a * |Omega| + b] is an element of End_A(2).
struct RelativeProducts {
  std::vector<OperadElement> dot;
  const OperadElement& at(const Semigroup& omega, std::size_t a, std::size_t b) const {
    return dot.at(a * omega.order() + b);
  }
};

/// {R_a}_{a in Omega}, elements of End_A(1).
using OperatorFamily = std::vector<OperadElement>;

DendFamily zero_dend_family(const EndOperad& end, const Semigroup& omega);

/// Checks, for all a, b in Omega,
///   prec_b o_1 prec_a  = prec_{ab} o_2 (prec_b + succ_a)        (a <_a b) <_b c = a <_{ab} (b <_b c + b >_a c)
///   prec_b o_1 succ_a  = succ_a o_2 prec_b                       (a >_a b) <_b c = a >_a (b <_b c)
///   succ_{ab} o_1 (prec_b + succ_a) = succ_a o_2 succ_b          (a <_b b + a >_a b) >_{ab} c = a >_a (b >_b c)
/// as identities in End_A(3), i.e. on all basis triples.
CheckReport check_dendriform_family(const EndOperad& end, const Semigroup& omega, const DendFamily& fam);
bool is_dendriform_family(const EndOperad& end, const Semigroup& omega, const DendFamily& fam);

/// The arity-2 element of Fam(End_A^Omega)^Dend with pi^[1]_{-,a} = prec_a, pi^[2]_{a,-} = succ_a.
OperadElement encode_dend_family(const FamDendOperad& fam_op, const DendFamily& fam);
DendFamily decode_dend_family(const FamDendOperad& fam_op, const OperadElement& pi);

/// The dendriform structure on A (x) kOmega:
///   (a(x)x) < (b(x)y) = (a <_y b) (x) xy,   (a(x)x) > (b(x)y) = (a >_x b) (x) xy.
/// Basis vector a (x) x has index a * |Omega| + x. Throws PreconditionFailure unless `fam` is
/// a dendriform family.
struct TensorDendriform {
  std::shared_ptr<const EndOperad> end;
  OperadElement prec;
  OperadElement succ;
};
TensorDendriform family_to_dendriform(const EndOperad& end, const Semigroup& omega, const DendFamily& fam);

/// R_a(x) R_b(y) = R_{ab}(R_a(x) y + x R_b(y)) for all a, b, as
/// (pi o_2 R_b) o_1 R_a = R_{ab} o_1 (pi o_1 R_a + pi o_2 R_b).
/// Throws PreconditionFailure unless pi is associative.
bool is_rota_baxter_family(const EndOperad& end, const Semigroup& omega, const OperadElement& pi,
                           const OperatorFamily& R);

/// prec_a = pi o_2 R_a (x <_a y = x R_a(y)), succ_a = pi o_1 R_a (x >_a y = R_a(x) y).
/// Throws PreconditionFailure unless R is a Rota-Baxter family.
DendFamily rb_family_split(const EndOperad& end, const Semigroup& omega, const OperadElement& pi,
                           const OperatorFamily& R);

/// (x ._{a,b} y) ._{ab,c} z = x ._{a,bc} (y ._{b,c} z), i.e. dot_{ab,c} o_1 dot_{a,b} = dot_{a,bc} o_2 dot_{b,c}.
CheckReport check_relative_associative(const EndOperad& end, const Semigroup& omega, const RelativeProducts& dots);
bool is_relative_associative(const EndOperad& end, const Semigroup& omega, const RelativeProducts& dots);

/// The arity-2 element of End_A^Omega with block (a, b) = dot_{a,b}.
OperadElement encode_relative(const OmegaOperad& omega_op, const RelativeProducts& dots);

/// dot_{a,b} = prec_b + succ_a. Throws PreconditionFailure unless `fam` is a dendriform family.
RelativeProducts family_to_relative(const EndOperad& end, const Semigroup& omega, const DendFamily& fam);

/// (a(x)x) . (b(x)y) = (a ._{x,y} b) (x) xy on A (x) kOmega.
OperadElement relative_to_tensor(const EndOperad& end, const Semigroup& omega, const RelativeProducts& dots,
                                 const EndOperad& tensor_end);

/// End operad of A (x) kOmega with basis labels "label(x)omega", sharing the window of `end`.
std::shared_ptr<const EndOperad> tensor_end_operad(const EndOperad& end, const Semigroup& omega);

}  // namespace operadkit
