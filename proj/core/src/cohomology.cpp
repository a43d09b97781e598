#include "operadkit/cohomology.hpp"

#include <array>

#include "operadkit/errors.hpp"
#include "operadkit/structure.hpp"

namespace operadkit {

namespace {

void require_multiplication(const Operad& op, const OperadElement& pi) {
  if (pi.arity != 2) throw PreconditionFailure("a multiplication has arity 2");
  if (!is_multiplication(op, pi)) throw PreconditionFailure(op.name() + ": pi is not a multiplication");
}

Vector dense(const OperadElement& f, std::size_t dim) { return f.coeffs.to_dense(dim); }

OperadElement element_from(std::size_t arity, const Vector& v) { return {arity, SparseVector::from_dense(v)}; }

// Column space of a matrix in echelon form, for repeated membership tests.
class ColumnSpan {
 public:
  explicit ColumnSpan(const Matrix& m) : echelon_(reduced_row_echelon(m.transpose())) {}
  explicit ColumnSpan(std::vector<SparseVector> columns, std::size_t rows)
      : echelon_(reduced_row_echelon(Matrix::from_columns(rows, columns).transpose())) {}

  bool contains(SparseVector v) const {
    for (std::size_t k = 0; k < echelon_.rows.size() && !v.empty(); ++k) {
      const Rational x = v.get(echelon_.pivot_columns[k]);
      if (sgn(x) != 0) v.axpy(-x, echelon_.rows[k]);
    }
    return v.empty();
  }
  std::size_t rank() const { return echelon_.rows.size(); }

 private:
  RowEchelon echelon_;
};

}  // namespace

Matrix differential_matrix(const Operad& op, const OperadElement& pi, std::size_t n) {
  require_multiplication(op, pi);
  if (n < 1 || n + 1 > op.max_arity()) {
    throw ArityOverflow("delta_" + std::to_string(n) + " needs arity " + std::to_string(n + 1) +
                        " inside the window of " + op.name());
  }
  std::vector<SparseVector> columns;
  const std::size_t dim = op.dimension(n);
  columns.reserve(dim);
  for (std::size_t j = 0; j < dim; ++j) columns.push_back(differential(op, pi, op.basis_element(n, j)).coeffs);
  return Matrix::from_columns(op.dimension(n + 1), columns);
}

CochainComplex::CochainComplex(const Operad& op, OperadElement pi, std::size_t top)
    : op_(&op), pi_(std::move(pi)), top_(top == 0 ? op.max_arity() : top) {
  if (top_ > op.max_arity()) throw ArityOverflow("complex top exceeds the window of " + op.name());
  require_multiplication(op, pi_);
  for (std::size_t n = 1; n < top_; ++n) delta_.push_back(differential_matrix(op, pi_, n));
  ranks_.resize(delta_.size());
  kernels_.resize(delta_.size());
  for (std::size_t n = 1; n + 1 < top_; ++n) {
    if (!(delta_[n] * delta_[n - 1]).is_zero()) {
      square_zero_ = false;
      first_defect_ = n;
    }
  }
}

const Matrix& CochainComplex::differential(std::size_t n) const {
  if (n < 1 || n >= top_) throw ArityOverflow("delta_" + std::to_string(n) + " is outside the complex");
  return delta_[n - 1];
}

std::size_t CochainComplex::differential_rank(std::size_t n) const {
  const Matrix& d = differential(n);
  auto& cached = ranks_[n - 1];
  if (!cached) cached = rank(d);
  return *cached;
}

std::size_t CochainComplex::cohomology_dimension(std::size_t n) const {
  return cochain_dimension(n) - differential_rank(n) - image_rank_into(n);
}

const std::vector<Vector>& CochainComplex::cocycle_basis(std::size_t n) const {
  const Matrix& d = differential(n);
  auto& cached = kernels_[n - 1];
  if (!cached) cached = kernel_basis(d);
  return *cached;
}

std::vector<Vector> CochainComplex::representatives(std::size_t n) const {
  const std::size_t dim = cochain_dimension(n);
  std::vector<SparseVector> spanning;
  if (n >= 2) {
    const Matrix& prev = differential(n - 1);
    for (std::size_t j = 0; j < prev.cols(); ++j) spanning.push_back(prev.column(j));
  }
  std::vector<Vector> reps;
  std::size_t current = spanning.empty() ? 0 : rank(Matrix::from_columns(dim, spanning));
  for (const auto& z : cocycle_basis(n)) {
    spanning.push_back(SparseVector::from_dense(z));
    const std::size_t next = rank(Matrix::from_columns(dim, spanning));
    if (next > current) {
      reps.push_back(z);
      current = next;
    } else {
      spanning.pop_back();
    }
  }
  return reps;
}

bool CochainComplex::is_cocycle(const OperadElement& f) const {
  return operadkit::differential(*op_, pi_, f).is_zero();
}

ImageMembership CochainComplex::coboundary(const OperadElement& f) const {
  op_->validate(f);
  if (f.arity == 1) {
    ImageMembership r;
    r.member = f.is_zero();
    if (r.member) r.witness = Vector{};
    return r;
  }
  return in_image(differential(f.arity - 1), dense(f, cochain_dimension(f.arity)));
}

CohomologyReport cohomology_dims(const Operad& op, const OperadElement& pi, std::size_t n_max) {
  if (n_max + 1 > op.max_arity()) {
    throw ArityOverflow("H^" + std::to_string(n_max) + " needs the window to reach arity " + std::to_string(n_max + 1));
  }
  CochainComplex complex(op, pi, n_max + 1);
  CohomologyReport report;
  report.square_zero = complex.square_zero();
  for (std::size_t n = 1; n <= n_max; ++n) {
    report.degrees.push_back(n);
    report.cochain_dims.push_back(complex.cochain_dimension(n));
    report.differential_ranks.push_back(complex.differential_rank(n));
    report.dims.push_back(complex.cohomology_dimension(n));
    report.representatives.push_back(complex.representatives(n));
  }
  return report;
}

CoboundaryResult is_coboundary(const Operad& op, const OperadElement& pi, const OperadElement& f) {
  op.validate(f);
  CoboundaryResult result;
  if (f.arity == 1) {
    require_multiplication(op, pi);
    result.coboundary = f.is_zero();
    if (result.coboundary) result.witness = op.zero(1);  // not strictly a preimage: C^0 is absent
    return result;
  }
  const Matrix d = differential_matrix(op, pi, f.arity - 1);
  auto membership = in_image(d, dense(f, op.dimension(f.arity)));
  result.coboundary = membership.member;
  if (membership.witness) result.witness = element_from(f.arity - 1, *membership.witness);
  return result;
}

CheckReport check_gerstenhaber_on_cohomology(const Operad& op, const OperadElement& pi,
                                             std::size_t max_cocycle_arity, const SamplingPolicy& policy) {
  const std::size_t window = op.max_arity();
  CochainComplex complex(op, pi, window);
  CheckReport report;
  Sampler sampler(policy);

  const std::size_t A = std::min(max_cocycle_arity, window - 1);
  std::vector<std::vector<OperadElement>> Z(A + 1);
  for (std::size_t n = 1; n <= A; ++n) {
    for (const auto& z : complex.cocycle_basis(n)) Z[n].push_back(element_from(n, z));
  }
  // B^n for 2 <= n <= window, as a reusable span.
  std::vector<std::optional<ColumnSpan>> B(window + 1);
  auto in_B = [&](const OperadElement& f) {
    if (f.arity == 1) return f.is_zero();
    auto& span = B[f.arity];
    if (!span) span.emplace(complex.differential(f.arity - 1));
    return span->contains(f.coeffs);
  };
  auto cup = [&](const OperadElement& f, const OperadElement& g) { return cup_product(op, pi, f, g); };
  auto br = [&](const OperadElement& f, const OperadElement& g) { return gerstenhaber_bracket(op, f, g); };
  auto describe = [&](std::initializer_list<const OperadElement*> xs) {
    std::string s;
    const char* names[] = {"x", "y", "z"};
    std::size_t k = 0;
    for (const auto* x : xs) {
      s += std::string(k ? ", " : "") + names[k] + "(arity " + std::to_string(x->arity) + ") = " + op.describe(*x);
      ++k;
    }
    return s;
  };

  for (std::size_t m = 1; m <= A; ++m) {
    for (std::size_t n = 1; n <= A; ++n) {
      const std::array<std::size_t, 2> sizes{Z[m].size(), Z[n].size()};
      const bool full = for_each_index_tuple(sizes, sampler, [&](std::span<const std::size_t> idx) {
        const OperadElement& x = Z[m][idx[0]];
        const OperadElement& y = Z[n][idx[1]];
        if (m + n + 1 <= window) {
          report.expect(complex.is_cocycle(cup(x, y)), "cup-cocycle", [&] { return describe({&x, &y}); });
        }
        if (m + n <= complex.top()) {
          OperadElement defect = cup(x, y);
          const OperadElement yx = cup(y, x);
          if (sign_power(static_cast<long long>(m * n)) > 0) {
            defect -= yx;
          } else {
            defect += yx;
          }
          report.expect(in_B(defect), "graded-commutativity", [&] { return describe({&x, &y}); });
        }
        if (m + n <= window) {
          report.expect(complex.is_cocycle(br(x, y)), "bracket-cocycle", [&] { return describe({&x, &y}); });
        }
      });
      if (!full) report.mark_sampled();

      for (std::size_t p = 1; p <= A; ++p) {
        if (m + n + p - 1 > complex.top()) continue;
        const std::array<std::size_t, 3> sizes3{Z[m].size(), Z[n].size(), Z[p].size()};
        const bool full3 = for_each_index_tuple(sizes3, sampler, [&](std::span<const std::size_t> idx) {
          const OperadElement& x = Z[m][idx[0]];
          const OperadElement& y = Z[n][idx[1]];
          const OperadElement& z = Z[p][idx[2]];
          OperadElement defect = br(x, cup(y, z)) - cup(br(x, y), z);
          const OperadElement last = cup(y, br(x, z));
          if (sign_power(static_cast<long long>((m - 1) * n)) > 0) {
            defect -= last;
          } else {
            defect += last;
          }
          report.expect(in_B(defect), "leibniz", [&] { return describe({&x, &y, &z}); });
        });
        if (!full3) report.mark_sampled();
      }
    }
  }

  for (std::size_t m = 1; m <= A; ++m) {
    for (std::size_t n = 1; n <= A; ++n) {
      for (std::size_t p = 1; p <= A && m + n + p <= window; ++p) {
        const std::array<std::size_t, 3> ar{m, n, p};
        const bool full = for_each_instance(op, ar, sampler, [&](std::span<const OperadElement> xs) {
          report.expect(cup(cup(xs[0], xs[1]), xs[2]) == cup(xs[0], cup(xs[1], xs[2])), "cup-associativity",
                        [&] { return describe({&xs[0], &xs[1], &xs[2]}); });
        });
        if (!full) report.mark_sampled();
      }
    }
  }
  return report;
}

InducedMapReport induced_cohomology_map(const OperadMorphism& phi, const OperadElement& pi,
                                        const OperadElement& pi_prime, std::size_t top) {
  const Operad& src = *phi.source;
  const Operad& dst = *phi.target;
  if (phi(pi) != pi_prime) throw PreconditionFailure(phi.name + " does not send pi to pi'");
  if (top == 0) top = std::min(src.max_arity(), dst.max_arity());
  CochainComplex C(src, pi, top);
  CochainComplex D(dst, pi_prime, top);
  InducedMapReport report;
  std::vector<Matrix> Phi;
  for (std::size_t n = 1; n <= top; ++n) Phi.push_back(phi.matrix(n));
  for (std::size_t n = 1; n < top; ++n) {
    report.degrees.push_back(n);
    const bool ok = Phi[n] * C.differential(n) == D.differential(n) * Phi[n - 1];
    report.commutes.push_back(ok);
    report.chain_map = report.chain_map && ok;
    report.source_dims.push_back(C.cohomology_dimension(n));
    report.target_dims.push_back(D.cohomology_dimension(n));
    std::vector<SparseVector> columns;
    if (n >= 2) {
      const Matrix& prev = D.differential(n - 1);
      for (std::size_t j = 0; j < prev.cols(); ++j) columns.push_back(prev.column(j));
    }
    for (const auto& z : C.cocycle_basis(n)) {
      columns.push_back(SparseVector::from_dense(Phi[n - 1].apply(z)));
    }
    const std::size_t r = columns.empty() ? 0 : rank(Matrix::from_columns(dst.dimension(n), columns));
    report.induced_ranks.push_back(r - D.image_rank_into(n));
  }
  return report;
}

}  // namespace operadkit
