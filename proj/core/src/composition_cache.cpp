#include "operadkit/composition_cache.hpp"

#include "operadkit/errors.hpp"

namespace operadkit {

const SparseVector& CompositionCache::basis_composite(std::size_t m, std::size_t slot, std::size_t n,
                                                      std::size_t a, std::size_t b) {
  // 8 bits each for m, slot, n and 20 bits each for the basis indices.
  constexpr std::uint64_t kIndexBits = 20;
  std::uint64_t key = (((static_cast<std::uint64_t>(m) << 8 | slot) << 8 | n) << kIndexBits | a) << kIndexBits | b;
  auto it = table_.find(key);
  if (it != table_.end()) return it->second;
  OperadElement c = op_.compose(op_.basis_element(m, a), slot, op_.basis_element(n, b));
  return table_.emplace(key, std::move(c.coeffs)).first->second;
}

OperadElement CompositionCache::compose(const OperadElement& f, std::size_t slot, const OperadElement& g) {
  constexpr std::size_t kMaxIndex = std::size_t{1} << 20;
  if (f.arity > 255 || g.arity > 255 || op_.dimension(f.arity) > kMaxIndex || op_.dimension(g.arity) > kMaxIndex) {
    return op_.compose(f, slot, g);
  }
  OperadElement result = op_.compose(op_.zero(f.arity), slot, op_.zero(g.arity));  // validates slot/window
  op_.validate(f);
  op_.validate(g);
  for (const auto& [a, x] : f.coeffs) {
    for (const auto& [b, y] : g.coeffs) {
      result.coeffs.axpy(x * y, basis_composite(f.arity, slot, g.arity, a, b));
    }
  }
  return result;
}

}  // namespace operadkit
