#pragma once

#include <optional>
#include <vector>

#include "operadkit/matrix.hpp"
#include "operadkit/morphism.hpp"
#include "operadkit/operad.hpp"
#include "operadkit/report.hpp"
#include "operadkit/sampling.hpp"

namespace operadkit {

/// Matrix of delta_pi = [[pi, -]] : O(n) -> O(n+1) in the operad's bases.
/// Throws PreconditionFailure unless pi is a multiplication, ArityOverflow if n+1 exceeds the window.
Matrix differential_matrix(const Operad& op, const OperadElement& pi, std::size_t n);

/// C^n = O(n) for 1 <= n <= top, with delta_n for n < top. There is no degree-0 term.
class CochainComplex {
 public:
  /// top defaults to the operad's window. Checks delta_{n+1} delta_n = 0 for every pair.
  CochainComplex(const Operad& op, OperadElement pi, std::size_t top = 0);

  const Operad& operad() const { return *op_; }
  const OperadElement& multiplication() const { return pi_; }
  std::size_t top() const { return top_; }

  std::size_t cochain_dimension(std::size_t n) const { return op_->dimension(n); }
  /// delta_n, 1 <= n < top.
  const Matrix& differential(std::size_t n) const;
  std::size_t differential_rank(std::size_t n) const;
  /// rank delta_n for 1 <= n < top, 0 for n = 0.
  std::size_t image_rank_into(std::size_t n) const { return n <= 1 ? 0 : differential_rank(n - 1); }
  /// dim H^n = dim C^n - rank delta_n - rank delta_{n-1}, for 1 <= n < top.
  std::size_t cohomology_dimension(std::size_t n) const;

  /// True iff every delta_{n+1} delta_n is the zero matrix.
  bool square_zero() const { return square_zero_; }
  /// Largest n with delta_{n+1} delta_n != 0, or 0.
  std::size_t first_square_defect() const { return first_defect_; }

  /// Basis of Z^n = ker delta_n.
  const std::vector<Vector>& cocycle_basis(std::size_t n) const;
  /// Cohomology classes: cocycles that together with B^n span Z^n, chosen greedily from
  /// the kernel basis.
  std::vector<Vector> representatives(std::size_t n) const;

  bool is_cocycle(const OperadElement& f) const;
  /// Membership of f in B^n = im delta_{n-1}; for n = 1 only zero is a coboundary.
  ImageMembership coboundary(const OperadElement& f) const;

 private:
  const Operad* op_;
  OperadElement pi_;
  std::size_t top_;
  std::vector<Matrix> delta_;  ///< delta_[n-1] = delta_n
  mutable std::vector<std::optional<std::size_t>> ranks_;
  mutable std::vector<std::optional<std::vector<Vector>>> kernels_;
  bool square_zero_ = true;
  std::size_t first_defect_ = 0;
};

struct CohomologyReport {
  std::vector<std::size_t> degrees;          ///< n = 1 .. n_max
  std::vector<std::size_t> cochain_dims;     ///< dim C^n
  std::vector<std::size_t> differential_ranks;  ///< rank delta_n
  std::vector<std::size_t> dims;             ///< dim H^n
  std::vector<std::vector<Vector>> representatives;
  bool square_zero = true;
};

/// dim H^n for n = 1..n_max. Requires n_max + 1 <= window (throws ArityOverflow).
CohomologyReport cohomology_dims(const Operad& op, const OperadElement& pi, std::size_t n_max);

struct CoboundaryResult {
  bool coboundary = false;
  std::optional<OperadElement> witness;  ///< g with delta(g) = f
  explicit operator bool() const { return coboundary; }
};

CoboundaryResult is_coboundary(const Operad& op, const OperadElement& pi, const OperadElement& f);

/// On basis cocycles x in Z^m, y in Z^n, z in Z^p (m, n, p <= max_cocycle_arity), wherever the
/// window allows:
///   (i)   x u y is a cocycle
///   (ii)  x u y - (-1)^{mn} y u x is a coboundary
///   (iii) [[x, y]] is a cocycle
///   (iv)  [[x, y u z]] - [[x, y]] u z - (-1)^{(m-1)n} y u [[x, z]] is a coboundary
/// and (f u g) u h = f u (g u h) on basis cochains. Instances that do not fit the window are
/// skipped rather than reported.
CheckReport check_gerstenhaber_on_cohomology(const Operad& op, const OperadElement& pi,
                                             std::size_t max_cocycle_arity, const SamplingPolicy& policy = {});

struct InducedMapReport {
  bool chain_map = true;
  std::vector<std::size_t> degrees;
  std::vector<bool> commutes;              ///< phi_{n+1} delta_n = delta'_n phi_n, per n
  std::vector<std::size_t> source_dims;    ///< dim H^n
  std::vector<std::size_t> target_dims;    ///< dim H'^n
  std::vector<std::size_t> induced_ranks;  ///< rank of phi_* : H^n -> H'^n
};

/// Checks phi o delta_pi = delta_pi' o phi as matrices for 1 <= n < top and reports the ranks
/// of the induced maps. top defaults to the smaller window. Throws PreconditionFailure unless
/// phi_2(pi) = pi' and both are multiplications.
InducedMapReport induced_cohomology_map(const OperadMorphism& phi, const OperadElement& pi,
                                        const OperadElement& pi_prime, std::size_t top = 0);

}  // namespace operadkit
