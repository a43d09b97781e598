#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "operadkit/operad.hpp"

namespace operadkit {

/// When to enumerate basis tuples and when to fall back to random elements.
///
/// Every identity we check is multilinear, so enumerating all basis tuples is a complete
/// proof on the window; random sampling is only used when that enumeration is too large.
struct SamplingPolicy {
  std::size_t exhaustive_limit = 100000;  ///< max product of dimensions to enumerate
  std::size_t random_samples = 100;
  std::uint64_t seed = 0;
  int min_entry = -2;
  int max_entry = 2;
};

/// Deterministic source of small random integers; identical seeds give identical streams
/// on every platform (no std::uniform_int_distribution).
class Sampler {
 public:
  explicit Sampler(const SamplingPolicy& policy) : policy_(policy), rng_(policy.seed) {}

  const SamplingPolicy& policy() const { return policy_; }
  /// Uniform in [0, bound).
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(rng_() % bound); }
  Rational entry();
  SparseVector random_vector(std::size_t length);
  OperadElement random_element(const Operad& op, std::size_t arity);

 private:
  SamplingPolicy policy_;
  std::mt19937_64 rng_;
};

using InstanceCallback = std::function<void(std::span<const OperadElement>)>;

/// Calls `visit` on every tuple of basis elements of the given arities when the product of
/// the dimensions is within the policy limit, and on random tuples otherwise.
/// Returns true when the enumeration was exhaustive.
bool for_each_instance(const Operad& op, std::span<const std::size_t> arities, Sampler& sampler,
                       const InstanceCallback& visit);

/// Same policy for plain index tuples: each index i ranges over [0, sizes[i]). In the
/// random regime, `random_samples` uniformly drawn tuples are visited.
bool for_each_index_tuple(std::span<const std::size_t> sizes, Sampler& sampler,
                          const std::function<void(std::span<const std::size_t>)>& visit);

}  // namespace operadkit
