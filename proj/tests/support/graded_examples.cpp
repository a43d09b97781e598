#include "graded_examples.hpp"

#include <array>

namespace operadkit::oracle {

namespace {

void put(MultilinearMap& m, std::initializer_list<std::size_t> in, std::size_t out, long v) {
  const std::vector<std::size_t> inputs(in);
  m.add(inputs, out, Rational(v));
}

}  // namespace

HomotopyFamilyOps two_dim_graded(std::size_t cap, long c, long a, long b, long b2, long t) {
  HomotopyFamilyOps ops(GradedModule({"u", "e"}, {0, 1}), Semigroup::singleton(), cap);
  if (c != 0) put(ops.mu_mut(1), {1}, 0, c);
  if (a != 0) put(ops.mu_mut(2), {0, 0}, 0, a);
  if (b != 0) put(ops.mu_mut(2), {0, 1}, 1, b);
  if (b2 != 0) put(ops.mu_mut(2), {1, 0}, 1, b2);
  if (t != 0 && cap >= 3) put(ops.mu_mut(3), {0, 0, 0}, 1, t);
  return ops;
}

HomotopyFamilyOps unit_dga(std::size_t cap) { return two_dim_graded(cap, 1, 1, 1, 1, 0); }

HomotopyFamilyOps dual_tensor_dga(std::size_t cap) {
  // Index b * 2 + d, b in {1, eps}, d in {u, e}.
  HomotopyFamilyOps ops(GradedModule({"1u", "1e", "epsu", "epse"}, {0, 1, 0, 1}), Semigroup::singleton(), cap);
  const HomotopyFamilyOps d = unit_dga(cap);
  const long bmul[2][2] = {{0, 1}, {1, -1}};  // product index of b * b' or -1 for zero
  for (std::size_t b = 0; b < 2; ++b) {
    // mu1 = id (x) mu1_D
    d.mu(1).for_each([&](std::span<const std::size_t> in, const SparseVector& image) {
      for (const auto& [k, c] : image) {
        const std::array<std::size_t, 1> x{b * 2 + in[0]};
        ops.mu_mut(1).add(x, b * 2 + k, c);
      }
    });
    for (std::size_t b2 = 0; b2 < 2; ++b2) {
      if (bmul[b][b2] < 0) continue;
      const std::size_t bb = static_cast<std::size_t>(bmul[b][b2]);
      d.mu(2).for_each([&](std::span<const std::size_t> in, const SparseVector& image) {
        for (const auto& [k, c] : image) {
          const std::array<std::size_t, 2> x{b * 2 + in[0], b2 * 2 + in[1]};
          ops.mu_mut(2).add(x, bb * 2 + k, c);
        }
      });
    }
  }
  return ops;
}

MultilinearMap dual_tensor_rb(const Rational& s) {
  MultilinearMap R(1, 4);
  if (s == 0) return R;
  for (std::size_t d = 0; d < 2; ++d) {
    const std::array<std::size_t, 1> x{d};
    R.add(x, 2 + d, s);
  }
  return R;
}

}  // namespace operadkit::oracle
