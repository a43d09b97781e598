#pragma once

#include <cstdint>
#include <unordered_map>

#include "operadkit/operad.hpp"

namespace operadkit {

/// Memoizes compositions of basis elements and extends them bilinearly.
///
/// Identity checks compose the same basis pairs many times over; for the derived
/// constructions (which delegate to their base operad) this is most of the cost.
class CompositionCache {
 public:
  explicit CompositionCache(const Operad& op) : op_(op) {}

  /// Equal to op.compose(f, slot, g), including all argument checks.
  OperadElement compose(const OperadElement& f, std::size_t slot, const OperadElement& g);

  std::size_t size() const { return table_.size(); }

 private:
  const SparseVector& basis_composite(std::size_t m, std::size_t slot, std::size_t n, std::size_t a,
                                      std::size_t b);

  const Operad& op_;
  std::unordered_map<std::uint64_t, SparseVector> table_;
};

}  // namespace operadkit
