#include "operadkit/homotopy.hpp"

#include <stdexcept>

#include "operadkit/dend.hpp"
#include "operadkit/errors.hpp"
#include "operadkit/omega.hpp"

namespace operadkit {

int insertion_sign(std::size_t i, std::size_t n, std::span<const int> degrees) {
  long long exponent = static_cast<long long>(i) * static_cast<long long>(n + 1);
  long long before = 0;
  for (std::size_t p = 0; p + 1 < i; ++p) before += degrees[p];
  exponent += static_cast<long long>(n) * before;
  return sign_power(exponent < 0 ? -exponent : exponent);
}

namespace {

std::vector<std::vector<MultilinearMap>> make_tables(std::size_t cap, std::size_t dim, std::size_t q,
                                                     bool dendriform) {
  if (cap < 1) throw std::invalid_argument("truncation cap must be at least 1");
  std::vector<std::vector<MultilinearMap>> ops;
  for (std::size_t k = 1; k <= cap; ++k) {
    const std::size_t count = dendriform ? k * int_power(q, k - 1) : int_power(q, k);
    ops.emplace_back(count, MultilinearMap(k, dim));
  }
  return ops;
}

std::vector<std::size_t> zeros(std::size_t k) { return std::vector<std::size_t>(k, 0); }

std::string describe_tuple(const GradedModule& module, std::span<const std::size_t> xs) {
  std::string s = "(";
  for (std::size_t p = 0; p < xs.size(); ++p) s += (p ? "," : "") + module.label(xs[p]);
  return s + ")";
}

// Evaluates the signed double sum for one (alpha, basis tuple). `outer(m, k_or_0, alpha)`
// and `inner(n, alpha, inputs)` abstract over A-infinity vs. Dend-infinity; for the
// latter the r-dependent component selection happens inside the callbacks.
template <typename Outer, typename Inner>
SparseVector stasheff_sum(const GradedModule& module, const Semigroup& omega, std::size_t cap,
                          std::span<const std::size_t> alpha, std::span<const std::size_t> a, Outer&& outer,
                          Inner&& inner) {
  const std::size_t N = a.size();
  std::vector<int> degrees;
  int total_degree = 0;
  for (std::size_t x : a) {
    degrees.push_back(module.degree(x));
    total_degree += module.degree(x);
  }
  const int expected = total_degree + static_cast<int>(N) - 3;
  SparseVector sum;
  std::vector<std::size_t> outer_alpha;
  std::vector<std::size_t> outer_inputs;
  for (std::size_t n = 1; n <= N; ++n) {
    const std::size_t m = N + 1 - n;
    if (m > cap || n > cap) continue;
    for (std::size_t i = 1; i <= m; ++i) {
      const auto inner_alpha = alpha.subspan(i - 1, n);
      const SparseVector in_value = inner(m, n, i, inner_alpha, a.subspan(i - 1, n));
      if (in_value.empty()) continue;
      outer_alpha.assign(alpha.begin(), alpha.begin() + (i - 1));
      outer_alpha.push_back(omega.product(inner_alpha));
      outer_alpha.insert(outer_alpha.end(), alpha.begin() + (i - 1 + n), alpha.end());
      outer_inputs.assign(a.begin(), a.begin() + (i - 1));
      outer_inputs.push_back(0);
      outer_inputs.insert(outer_inputs.end(), a.begin() + (i - 1 + n), a.end());
      const int sign = insertion_sign(i, n, degrees);
      for (const auto& [b, c] : in_value) {
        outer_inputs[i - 1] = b;
        const SparseVector& term = outer(m, n, i, outer_alpha, outer_inputs);
        for (const auto& [k, x] : term) {
          if (module.degree(k) != expected) {
            throw DegreeError("composite term of degree " + std::to_string(module.degree(k)) + " in an identity of degree " +
                              std::to_string(expected));
          }
        }
        sum.axpy(sign * c, term);
      }
    }
  }
  return sum;
}

void check_cap(std::size_t n_cap, std::size_t cap) {
  if (n_cap < 1 || n_cap > 2 * cap - 1) {
    throw std::invalid_argument("identity cap " + std::to_string(n_cap) + " needs operations up to arity " +
                                std::to_string((n_cap + 1) / 2 + 1) + "; truncation cap is " + std::to_string(cap));
  }
}

// Visits all (alpha, basis tuple) pairs of length N under the sampling policy.
bool for_each_identity_instance(std::size_t N, std::size_t q, std::size_t d, Sampler& sampler,
                                const std::function<void(std::span<const std::size_t>, std::span<const std::size_t>)>& visit) {
  std::vector<std::size_t> sizes(N, q);
  sizes.insert(sizes.end(), N, d);
  return for_each_index_tuple(sizes, sampler, [&](std::span<const std::size_t> idx) {
    visit(idx.subspan(0, N), idx.subspan(N, N));
  });
}

std::vector<std::size_t> drop(std::span<const std::size_t> xs, std::size_t r) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < xs.size(); ++p) {
    if (p + 1 != r) out.push_back(xs[p]);
  }
  return out;
}

}  // namespace

HomotopyFamilyOps::HomotopyFamilyOps(GradedModule module, Semigroup omega, std::size_t cap)
    : module_(std::move(module)), omega_(std::move(omega)), cap_(cap),
      ops_(make_tables(cap, module_.dimension(), omega_.order(), false)) {
  if (!omega_.is_associative()) throw PreconditionFailure("Omega is not associative");
}

const MultilinearMap& HomotopyFamilyOps::mu(std::size_t k, std::span<const std::size_t> alpha) const {
  if (k < 1 || k > cap_ || alpha.size() != k) throw DimensionMismatch("mu^k selector out of range");
  return ops_[k - 1][tuple_index(alpha, omega_.order())];
}

MultilinearMap& HomotopyFamilyOps::mu_mut(std::size_t k, std::span<const std::size_t> alpha) {
  if (k < 1 || k > cap_ || alpha.size() != k) throw DimensionMismatch("mu^k selector out of range");
  return ops_[k - 1][tuple_index(alpha, omega_.order())];
}

const MultilinearMap& HomotopyFamilyOps::mu(std::size_t k) const { return mu(k, zeros(k)); }
MultilinearMap& HomotopyFamilyOps::mu_mut(std::size_t k) { return mu_mut(k, zeros(k)); }

void HomotopyFamilyOps::validate() const {
  std::vector<std::size_t> alpha;
  for (std::size_t k = 1; k <= cap_; ++k) {
    for (std::size_t t = 0; t < ops_[k - 1].size(); ++t) {
      tuple_decode(t, k, omega_.order(), alpha);
      ops_[k - 1][t].require_degree(module_, static_cast<int>(k) - 2,
                                    "mu^" + std::to_string(k) + "_" + omega_.describe_tuple(alpha));
    }
  }
}

bool HomotopyFamilyOps::is_zero() const {
  for (const auto& level : ops_) {
    for (const auto& f : level) {
      if (!f.is_zero()) return false;
    }
  }
  return true;
}

bool operator==(const HomotopyFamilyOps& a, const HomotopyFamilyOps& b) {
  return a.cap_ == b.cap_ && a.module_.degrees() == b.module_.degrees() && a.omega_.order() == b.omega_.order() &&
         a.ops_ == b.ops_;
}

DendInfFamilyOps::DendInfFamilyOps(GradedModule module, Semigroup omega, std::size_t cap)
    : module_(std::move(module)), omega_(std::move(omega)), cap_(cap),
      ops_(make_tables(cap, module_.dimension(), omega_.order(), true)) {
  if (!omega_.is_associative()) throw PreconditionFailure("Omega is not associative");
}

std::size_t DendInfFamilyOps::slot(std::size_t k, std::size_t r, std::span<const std::size_t> reduced) const {
  if (k < 1 || k > cap_ || r < 1 || r > k || reduced.size() + 1 != k) {
    throw DimensionMismatch("eta^{k,[r]} selector out of range");
  }
  return (r - 1) * int_power(omega_.order(), k - 1) + tuple_index(reduced, omega_.order());
}

const MultilinearMap& DendInfFamilyOps::eta(std::size_t k, std::size_t r, std::span<const std::size_t> alpha) const {
  if (alpha.size() != k) throw DimensionMismatch("eta^k needs a k-tuple");
  return ops_[k - 1][slot(k, r, drop(alpha, r))];
}

MultilinearMap& DendInfFamilyOps::eta_reduced_mut(std::size_t k, std::size_t r, std::span<const std::size_t> reduced) {
  return ops_[k - 1][slot(k, r, reduced)];
}

const MultilinearMap& DendInfFamilyOps::eta_reduced(std::size_t k, std::size_t r,
                                                    std::span<const std::size_t> reduced) const {
  return ops_[k - 1][slot(k, r, reduced)];
}

void DendInfFamilyOps::validate() const {
  for (std::size_t k = 1; k <= cap_; ++k) {
    for (const auto& f : ops_[k - 1]) f.require_degree(module_, static_cast<int>(k) - 2, "eta^" + std::to_string(k));
  }
}

bool DendInfFamilyOps::is_zero() const {
  for (const auto& level : ops_) {
    for (const auto& f : level) {
      if (!f.is_zero()) return false;
    }
  }
  return true;
}

bool operator==(const DendInfFamilyOps& a, const DendInfFamilyOps& b) {
  return a.cap_ == b.cap_ && a.module_.degrees() == b.module_.degrees() && a.omega_.order() == b.omega_.order() &&
         a.ops_ == b.ops_;
}

CheckReport check_ainf_relative(const HomotopyFamilyOps& ops, std::size_t n_cap, const SamplingPolicy& policy) {
  check_cap(n_cap, ops.cap());
  ops.validate();
  CheckReport report;
  Sampler sampler(policy);
  const auto& module = ops.module();
  const auto& omega = ops.semigroup();
  auto outer = [&](std::size_t m, std::size_t, std::size_t, std::span<const std::size_t> alpha,
                   std::span<const std::size_t> in) -> const SparseVector& { return ops.mu(m, alpha).on_basis(in); };
  auto inner = [&](std::size_t, std::size_t n, std::size_t, std::span<const std::size_t> alpha,
                   std::span<const std::size_t> in) { return ops.mu(n, alpha).on_basis(in); };
  for (std::size_t N = 1; N <= n_cap; ++N) {
    const bool full = for_each_identity_instance(
        N, omega.order(), module.dimension(), sampler,
        [&](std::span<const std::size_t> alpha, std::span<const std::size_t> a) {
          const SparseVector sum = stasheff_sum(module, omega, ops.cap(), alpha, a, outer, inner);
          report.expect(sum.empty(), "ainf-N" + std::to_string(N), [&] {
            return "N=" + std::to_string(N) + " alpha=" + omega.describe_tuple(alpha) +
                   " a=" + describe_tuple(module, a) + " nonzero sum";
          });
        });
    if (!full) report.mark_sampled();
  }
  return report;
}

CheckReport check_dendinf_family(const DendInfFamilyOps& ops, std::size_t n_cap, const SamplingPolicy& policy) {
  check_cap(n_cap, ops.cap());
  ops.validate();
  CheckReport report;
  Sampler sampler(policy);
  const auto& module = ops.module();
  const auto& omega = ops.semigroup();
  for (std::size_t N = 1; N <= n_cap; ++N) {
    const bool full = for_each_identity_instance(
        N, omega.order(), module.dimension(), sampler,
        [&](std::span<const std::size_t> alpha, std::span<const std::size_t> a) {
          for (std::size_t r = 1; r <= N; ++r) {
            auto outer = [&](std::size_t m, std::size_t n, std::size_t i, std::span<const std::size_t> oa,
                             std::span<const std::size_t> in) -> const SparseVector& {
              return ops.eta(m, r0_map(m, n, i, r).value, oa).on_basis(in);
            };
            auto inner = [&](std::size_t m, std::size_t n, std::size_t i, std::span<const std::size_t> ia,
                             std::span<const std::size_t> in) {
              const BoxOrSum sel = ri_map(m, n, i, r);
              if (const auto* box = std::get_if<BoxIndex>(&sel)) return ops.eta(n, box->value, ia).on_basis(in);
              SparseVector total;
              for (std::size_t s : std::get<FormalSum>(sel).values) total += ops.eta(n, s, ia).on_basis(in);
              return total;
            };
            const SparseVector sum = stasheff_sum(module, omega, ops.cap(), alpha, a, outer, inner);
            report.expect(sum.empty(), "dendinf-N" + std::to_string(N), [&] {
              return "N=" + std::to_string(N) + " r=" + std::to_string(r) + " alpha=" + omega.describe_tuple(alpha) +
                     " a=" + describe_tuple(module, a) + " nonzero sum";
            });
          }
        });
    if (!full) report.mark_sampled();
  }
  return report;
}

HomotopyFamilyOps dendinf_total(const DendInfFamilyOps& ops, std::size_t n_cap) {
  if (!check_dendinf_family(ops, n_cap).ok()) throw PreconditionFailure("not a Dend-infinity family up to the cap");
  const auto& omega = ops.semigroup();
  HomotopyFamilyOps total(ops.module(), omega, ops.cap());
  std::vector<std::size_t> alpha;
  for (std::size_t k = 1; k <= ops.cap(); ++k) {
    for (std::size_t t = 0; t < int_power(omega.order(), k); ++t) {
      tuple_decode(t, k, omega.order(), alpha);
      for (std::size_t r = 1; r <= k; ++r) total.mu_mut(k, alpha) += ops.eta(k, r, alpha);
    }
  }
  return total;
}

DendInfFamilyOps dendinf_tensor_omega(const DendInfFamilyOps& ops, std::size_t n_cap) {
  if (!check_dendinf_family(ops, n_cap).ok()) throw PreconditionFailure("not a Dend-infinity family up to the cap");
  const auto& module = ops.module();
  const auto& omega = ops.semigroup();
  const std::size_t q = omega.order();
  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (std::size_t a = 0; a < module.dimension(); ++a) {
    for (std::size_t w = 0; w < q; ++w) {
      labels.push_back(module.label(a) + "(x)" + omega.label(w));
      degrees.push_back(module.degree(a));
    }
  }
  DendInfFamilyOps out(GradedModule(std::move(labels), std::move(degrees)), Semigroup::singleton(), ops.cap());
  std::vector<std::size_t> alpha;
  std::vector<std::size_t> tensor_in;
  for (std::size_t k = 1; k <= ops.cap(); ++k) {
    const std::vector<std::size_t> reduced(k - 1, 0);
    for (std::size_t t = 0; t < int_power(q, k); ++t) {
      tuple_decode(t, k, q, alpha);
      const std::size_t w = omega.product(alpha);
      for (std::size_t r = 1; r <= k; ++r) {
        MultilinearMap& target = out.eta_reduced_mut(k, r, reduced);
        ops.eta(k, r, alpha).for_each([&](std::span<const std::size_t> in, const SparseVector& image) {
          tensor_in.resize(k);
          for (std::size_t p = 0; p < k; ++p) tensor_in[p] = in[p] * q + alpha[p];
          for (const auto& [b, c] : image) target.add(tensor_in, b * q + w, c);
        });
      }
    }
  }
  return out;
}

namespace {

void check_rb_shape(const HomotopyFamilyOps& ops, const Semigroup& omega, const HomotopyRBFamily& R) {
  if (ops.semigroup().order() != 1) {
    throw std::invalid_argument("homotopy Rota-Baxter families live on an ordinary A-infinity algebra");
  }
  if (R.size() != omega.order()) throw DimensionMismatch("one operator per element of Omega is required");
  for (std::size_t w = 0; w < R.size(); ++w) {
    if (R[w].arity() != 1) throw DimensionMismatch("Rota-Baxter operators are unary");
    R[w].require_degree(ops.module(), 0, "R_" + omega.label(w));
  }
}

// mu^k(R_{a_1} x_1, .., x_r, .., R_{a_k} x_k), with r = 0 meaning every slot gets R.
SparseVector rb_term(const HomotopyFamilyOps& ops, const HomotopyRBFamily& R, std::span<const std::size_t> alpha,
                     std::span<const std::size_t> x, std::size_t r) {
  const std::size_t k = x.size();
  std::vector<SparseVector> args;
  for (std::size_t p = 0; p < k; ++p) {
    const std::array<std::size_t, 1> in{x[p]};
    args.push_back(p + 1 == r ? SparseVector::unit(x[p]) : R[alpha[p]].on_basis(in));
  }
  return ops.mu(k).apply(args);
}

}  // namespace

CheckReport check_homotopy_rb_family(const HomotopyFamilyOps& ops, const Semigroup& omega,
                                     const HomotopyRBFamily& R, std::size_t k_cap, const SamplingPolicy& policy) {
  check_rb_shape(ops, omega, R);
  const std::size_t n_cap = std::min(2 * k_cap - 1, 2 * ops.cap() - 1);
  if (!check_ainf_relative(ops, n_cap, policy).ok()) {
    throw PreconditionFailure("operations are not A-infinity up to N = " + std::to_string(n_cap));
  }
  CheckReport report;
  Sampler sampler(policy);
  const auto& module = ops.module();
  for (std::size_t k = 1; k <= std::min(k_cap, ops.cap()); ++k) {
    const bool full = for_each_identity_instance(
        k, omega.order(), module.dimension(), sampler,
        [&](std::span<const std::size_t> alpha, std::span<const std::size_t> x) {
          const SparseVector lhs = rb_term(ops, R, alpha, x, 0);
          SparseVector inner;
          for (std::size_t r = 1; r <= k; ++r) inner += rb_term(ops, R, alpha, x, r);
          const std::array<SparseVector, 1> arg{inner};
          const SparseVector rhs = R[omega.product(alpha)].apply(arg);
          report.expect(lhs == rhs, "homotopy-rb-k" + std::to_string(k), [&] {
            return "k=" + std::to_string(k) + " alpha=" + omega.describe_tuple(alpha) +
                   " x=" + describe_tuple(module, x);
          });
        });
    if (!full) report.mark_sampled();
  }
  return report;
}

DendInfFamilyOps homotopy_rb_split(const HomotopyFamilyOps& ops, const Semigroup& omega, const HomotopyRBFamily& R) {
  if (!check_homotopy_rb_family(ops, omega, R, ops.cap()).ok()) {
    throw PreconditionFailure("not a homotopy Rota-Baxter family up to the cap");
  }
  const std::size_t q = omega.order();
  const std::size_t d = ops.module().dimension();
  DendInfFamilyOps out(ops.module(), omega, ops.cap());
  std::vector<std::size_t> reduced;
  std::vector<std::size_t> x;
  for (std::size_t k = 1; k <= ops.cap(); ++k) {
    for (std::size_t r = 1; r <= k; ++r) {
      for (std::size_t t = 0; t < int_power(q, k - 1); ++t) {
        tuple_decode(t, k - 1, q, reduced);
        std::vector<std::size_t> alpha = reduced;
        alpha.insert(alpha.begin() + static_cast<std::ptrdiff_t>(r - 1), 0);  // slot r is unused
        MultilinearMap& target = out.eta_reduced_mut(k, r, reduced);
        for (std::size_t u = 0; u < int_power(d, k); ++u) {
          tuple_decode(u, k, d, x);
          target.on_basis_mut(x) = rb_term(ops, R, alpha, x, r);
        }
      }
    }
  }
  return out;
}

MultilinearMap to_multilinear(const EndOperad& end, const OperadElement& f) {
  end.validate(f);
  MultilinearMap map(f.arity, end.module().dimension());
  std::vector<std::size_t> in;
  for (const auto& [idx, c] : f.coeffs) {
    const std::size_t out = end.decode(f.arity, idx, in);
    map.add(in, out, c);
  }
  return map;
}

GradedModule degree_zero_module(const EndOperad& end) { return GradedModule::concentrated(end.module().labels()); }

HomotopyFamilyOps ainf_from_relative(const EndOperad& end, const Semigroup& omega, const RelativeProducts& dots,
                                     std::size_t cap) {
  if (cap < 2) throw std::invalid_argument("a relative product needs a truncation cap of at least 2");
  HomotopyFamilyOps ops(degree_zero_module(end), omega, cap);
  for (std::size_t a = 0; a < omega.order(); ++a) {
    for (std::size_t b = 0; b < omega.order(); ++b) {
      const std::array<std::size_t, 2> ab{a, b};
      ops.mu_mut(2, ab) = to_multilinear(end, dots.at(omega, a, b));
    }
  }
  return ops;
}

DendInfFamilyOps dendinf_from_family(const EndOperad& end, const Semigroup& omega, const DendFamily& fam,
                                     std::size_t cap) {
  if (cap < 2) throw std::invalid_argument("a dendriform family needs a truncation cap of at least 2");
  if (fam.prec.size() != omega.order() || fam.succ.size() != omega.order()) {
    throw DimensionMismatch("one operation pair per element of Omega is required");
  }
  DendInfFamilyOps ops(degree_zero_module(end), omega, cap);
  for (std::size_t w = 0; w < omega.order(); ++w) {
    const std::array<std::size_t, 1> t{w};
    ops.eta_reduced_mut(2, 1, t) = to_multilinear(end, fam.prec[w]);
    ops.eta_reduced_mut(2, 2, t) = to_multilinear(end, fam.succ[w]);
  }
  return ops;
}

}  // namespace operadkit
