#include "operadkit/morphism.hpp"

#include <array>

#include "operadkit/errors.hpp"

namespace operadkit {

Matrix OperadMorphism::matrix(std::size_t arity) const {
  std::vector<SparseVector> columns;
  for (std::size_t j = 0; j < source->dimension(arity); ++j) {
    OperadElement image = map(source->basis_element(arity, j));
    if (image.arity != arity) throw DimensionMismatch(name + " does not preserve arity");
    columns.push_back(std::move(image.coeffs));
  }
  return Matrix::from_columns(target->dimension(arity), columns);
}

OperadMorphism identity_morphism(OperadPtr op) {
  return {op, op, [](const OperadElement& f) { return f; }, "id_" + op->name()};
}

CheckReport check_morphism(const OperadMorphism& phi, std::size_t arity_cap, const SamplingPolicy& policy) {
  const Operad& src = *phi.source;
  const Operad& dst = *phi.target;
  if (arity_cap > src.max_arity() || arity_cap > dst.max_arity()) {
    throw ArityOverflow("arity cap exceeds the window of " + phi.name);
  }
  CheckReport report;
  Sampler sampler(policy);
  report.expect(phi(src.identity()) == dst.identity(), "unit", [] { return std::string("phi_1(1) != 1'"); });

  for (std::size_t m = 1; m <= arity_cap; ++m) {
    for (std::size_t s = 0; s < policy.random_samples; ++s) {
      const OperadElement f = sampler.random_element(src, m);
      const OperadElement g = sampler.random_element(src, m);
      const Rational c = sampler.entry();
      report.expect(phi(f + c * g) == phi(f) + c * phi(g), "linearity", [&] {
        return "arity " + std::to_string(m) + ", f = " + src.describe(f) + ", g = " + src.describe(g) +
               ", c = " + to_string(c);
      });
    }
    report.mark_sampled();
  }

  for (std::size_t m = 1; m <= arity_cap; ++m) {
    for (std::size_t n = 1; m + n - 1 <= arity_cap; ++n) {
      const std::array<std::size_t, 2> ar{m, n};
      const bool full = for_each_instance(src, ar, sampler, [&](std::span<const OperadElement> xs) {
        const OperadElement pf = phi(xs[0]);
        const OperadElement pg = phi(xs[1]);
        for (std::size_t i = 1; i <= m; ++i) {
          report.expect(phi(src.compose(xs[0], i, xs[1])) == dst.compose(pf, i, pg), "composition", [&] {
            return "i=" + std::to_string(i) + ", f = " + src.describe(xs[0]) + ", g = " + src.describe(xs[1]);
          });
        }
      });
      if (!full) report.mark_sampled();
    }
  }
  return report;
}

}  // namespace operadkit
