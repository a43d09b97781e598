#include "operadkit/axioms.hpp"

#include <array>

#include "operadkit/composition_cache.hpp"
#include "operadkit/errors.hpp"

namespace operadkit {

namespace {

std::string describe_instance(const Operad& op, std::span<const OperadElement> xs, const std::string& slots) {
  static constexpr std::array<const char*, 3> kNames = {"f", "g", "h"};
  std::string s = slots;
  for (std::size_t p = 0; p < xs.size(); ++p) {
    s += std::string(", ") + kNames[p] + "(arity " + std::to_string(xs[p].arity) + ") = " + op.describe(xs[p]);
  }
  return s;
}

}  // namespace

CheckReport check_operad_axioms(const Operad& op, std::size_t arity_cap, const SamplingPolicy& policy) {
  if (arity_cap > op.max_arity()) {
    throw ArityOverflow("arity cap " + std::to_string(arity_cap) + " exceeds the window of " + op.name());
  }
  CheckReport report;
  Sampler sampler(policy);
  CompositionCache cache(op);
  const OperadElement unit = op.identity();

  for (std::size_t m = 1; m <= arity_cap; ++m) {
    const std::array<std::size_t, 1> ar{m};
    const bool full = for_each_instance(op, ar, sampler, [&](std::span<const OperadElement> xs) {
      const OperadElement& f = xs[0];
      report.expect(op.compose(unit, 1, f) == f, "unit", [&] { return describe_instance(op, xs, "1 o_1 f"); });
      for (std::size_t i = 1; i <= m; ++i) {
        report.expect(op.compose(f, i, unit) == f, "unit",
                      [&] { return describe_instance(op, xs, "f o_" + std::to_string(i) + " 1"); });
      }
    });
    if (!full) report.mark_sampled();
  }

  for (std::size_t m = 1; m <= arity_cap; ++m) {
    for (std::size_t n = 1; m + n - 1 <= arity_cap; ++n) {
      for (std::size_t p = 1; m + n + p - 2 <= arity_cap; ++p) {
        const std::array<std::size_t, 3> ar{m, n, p};
        const bool full = for_each_instance(op, ar, sampler, [&](std::span<const OperadElement> xs) {
          const OperadElement& f = xs[0];
          const OperadElement& g = xs[1];
          const OperadElement& h = xs[2];
          for (std::size_t i = 1; i <= m; ++i) {
            const OperadElement fg = cache.compose(f, i, g);
            for (std::size_t j = 1; j <= n; ++j) {
              const OperadElement lhs = cache.compose(fg, i + j - 1, h);
              const OperadElement rhs = cache.compose(f, i, cache.compose(g, j, h));
              report.expect(lhs == rhs, "sequential", [&] {
                return describe_instance(op, xs, "i=" + std::to_string(i) + " j=" + std::to_string(j));
              });
            }
            for (std::size_t j = i + 1; j <= m; ++j) {
              const OperadElement lhs = cache.compose(fg, j + n - 1, h);
              const OperadElement rhs = cache.compose(cache.compose(f, j, h), i, g);
              report.expect(lhs == rhs, "parallel", [&] {
                return describe_instance(op, xs, "i=" + std::to_string(i) + " j=" + std::to_string(j));
              });
            }
          }
        });
        if (!full) report.mark_sampled();
      }
    }
  }
  return report;
}

}  // namespace operadkit
