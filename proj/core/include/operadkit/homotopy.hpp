#pragma once

#include <span>
#include <vector>

#include "operadkit/end_operad.hpp"
#include "operadkit/family.hpp"
#include "operadkit/graded.hpp"
#include "operadkit/report.hpp"
#include "operadkit/sampling.hpp"
#include "operadkit/semigroup.hpp"

namespace operadkit {

/// (-1)^{i(n+1) + n(|a_1| + ... + |a_{i-1}|)}: the sign attached to inserting an n-ary
/// operation at position i. `degrees` holds |a_1|, ..., |a_{i-1}| (or more; only the first
/// i-1 are read).
int insertion_sign(std::size_t i, std::size_t n, std::span<const int> degrees);

/// Operations mu^k_{a_1..a_k} : A^{(x)k} -> A for 1 <= k <= cap, one per Omega-tuple, each of
/// degree k - 2. Operations above the cap are zero. A singleton Omega gives an ordinary
/// A-infinity structure.
class HomotopyFamilyOps {
 public:
  HomotopyFamilyOps(GradedModule module, Semigroup omega, std::size_t cap);

  const GradedModule& module() const { return module_; }
  const Semigroup& semigroup() const { return omega_; }
  std::size_t cap() const { return cap_; }

  const MultilinearMap& mu(std::size_t k, std::span<const std::size_t> alpha) const;
  MultilinearMap& mu_mut(std::size_t k, std::span<const std::size_t> alpha);
  /// mu^k for the singleton semigroup.
  const MultilinearMap& mu(std::size_t k) const;
  MultilinearMap& mu_mut(std::size_t k);

  /// Throws DegreeError if some mu^k does not have degree k - 2.
  void validate() const;
  bool is_zero() const;
  friend bool operator==(const HomotopyFamilyOps&, const HomotopyFamilyOps&);

 private:
  GradedModule module_;
  Semigroup omega_;
  std::size_t cap_;
  std::vector<std::vector<MultilinearMap>> ops_;  ///< ops_[k-1][tuple index]
};

/// Operations eta^{k,[r]}_{a_1..a_k} of degree k - 2, with eta^{k,[r]} independent of a_r:
/// component [r] is stored as a family over Omega^{k-1} (a_r removed).
class DendInfFamilyOps {
 public:
  DendInfFamilyOps(GradedModule module, Semigroup omega, std::size_t cap);

  const GradedModule& module() const { return module_; }
  const Semigroup& semigroup() const { return omega_; }
  std::size_t cap() const { return cap_; }

  /// eta^{k,[r]} at the full tuple (a_r is ignored).
  const MultilinearMap& eta(std::size_t k, std::size_t r, std::span<const std::size_t> alpha) const;
  /// eta^{k,[r]} at the reduced tuple (length k - 1).
  MultilinearMap& eta_reduced_mut(std::size_t k, std::size_t r, std::span<const std::size_t> reduced);
  const MultilinearMap& eta_reduced(std::size_t k, std::size_t r, std::span<const std::size_t> reduced) const;

  void validate() const;
  bool is_zero() const;
  friend bool operator==(const DendInfFamilyOps&, const DendInfFamilyOps&);

 private:
  std::size_t slot(std::size_t k, std::size_t r, std::span<const std::size_t> reduced) const;

  GradedModule module_;
  Semigroup omega_;
  std::size_t cap_;
  std::vector<std::vector<MultilinearMap>> ops_;  ///< ops_[k-1][(r-1) |Omega|^{k-1} + reduced]
};

/// Degree-0 linear maps R_a : A -> A, one per element of Omega.
using HomotopyRBFamily = std::vector<MultilinearMap>;

/// For every N <= n_cap, Omega-tuple and basis tuple:
///   sum_{m+n=N+1} sum_i sign mu^m_{a_1,..,a_i...a_{i+n-1},..,a_N}(a_1,..,mu^n_{a_i..}(a_i..a_{i+n-1}),..,a_N) = 0.
/// Throws DegreeError for ops violating the degree law and std::invalid_argument when
/// n_cap > 2 * cap - 1.
CheckReport check_ainf_relative(const HomotopyFamilyOps& ops, std::size_t n_cap, const SamplingPolicy& policy = {});

/// The same sum with eta^{m, R0[r]} outside and eta^{n, Ri[r]} inside, for every [r] in C_N.
CheckReport check_dendinf_family(const DendInfFamilyOps& ops, std::size_t n_cap, const SamplingPolicy& policy = {});

/// mu^k = eta^{k,[1]} + ... + eta^{k,[k]}. Throws PreconditionFailure unless ops pass
/// check_dendinf_family up to n_cap.
HomotopyFamilyOps dendinf_total(const DendInfFamilyOps& ops, std::size_t n_cap);

/// Ordinary Dend-infinity operations on A (x) kOmega (basis index a * |Omega| + x):
///   eta^{k,[r]}(a_1(x)x_1, .., a_k(x)x_k) = eta^{k,[r]}_{x_1..x_k}(a_1..a_k) (x) x_1...x_k.
/// Throws PreconditionFailure unless ops pass check_dendinf_family up to n_cap.
DendInfFamilyOps dendinf_tensor_omega(const DendInfFamilyOps& ops, std::size_t n_cap);

/// For k <= k_cap, every Omega-tuple and basis tuple:
///   mu^k(R_{a_1} x_1, .., R_{a_k} x_k) = R_{a_1...a_k}( sum_r mu^k(R x_1, .., x_r, .., R x_k) ).
/// `ops` must use the singleton semigroup; throws DegreeError if some R_a is not of degree 0,
/// and PreconditionFailure if ops is not A-infinity up to 2 k_cap - 1 (truncated at its cap).
CheckReport check_homotopy_rb_family(const HomotopyFamilyOps& ops, const Semigroup& omega,
                                     const HomotopyRBFamily& R, std::size_t k_cap,
                                     const SamplingPolicy& policy = {});

/// eta^{k,[r]}_{a_1..a_k}(x_1..x_k) = mu^k(R_{a_1} x_1, .., x_r, .., R_{a_k} x_k) for k <= ops.cap().
/// Throws PreconditionFailure unless check_homotopy_rb_family passes up to ops.cap().
DendInfFamilyOps homotopy_rb_split(const HomotopyFamilyOps& ops, const Semigroup& omega, const HomotopyRBFamily& R);

/// Converters from End_A elements (ungraded data) to multilinear tables.
MultilinearMap to_multilinear(const EndOperad& end, const OperadElement& f);
GradedModule degree_zero_module(const EndOperad& end);
/// mu^2_{a,b} = dot_{a,b}, other operations zero, on A in degree 0.
HomotopyFamilyOps ainf_from_relative(const EndOperad& end, const Semigroup& omega, const RelativeProducts& dots,
                                     std::size_t cap);
/// eta^{2,[1]}_{-,a} = prec_a, eta^{2,[2]}_{a,-} = succ_a, other operations zero.
DendInfFamilyOps dendinf_from_family(const EndOperad& end, const Semigroup& omega, const DendFamily& fam,
                                     std::size_t cap);

}  // namespace operadkit
