#include "operadkit/sampling.hpp"

namespace operadkit {

Rational Sampler::entry() {
  const auto span = static_cast<std::size_t>(policy_.max_entry - policy_.min_entry + 1);
  return Rational(policy_.min_entry + static_cast<int>(below(span)));
}

SparseVector Sampler::random_vector(std::size_t length) {
  std::vector<SparseVector::Entry> entries;
  for (std::size_t i = 0; i < length; ++i) {
    Rational x = entry();
    if (sgn(x) != 0) entries.emplace_back(i, std::move(x));
  }
  return SparseVector::from_entries(std::move(entries));
}

OperadElement Sampler::random_element(const Operad& op, std::size_t arity) {
  OperadElement f = op.zero(arity);
  f.coeffs = random_vector(op.dimension(arity));
  return f;
}

namespace {

bool within_limit(std::span<const std::size_t> sizes, std::size_t limit) {
  std::size_t product = 1;
  for (std::size_t s : sizes) {
    if (s == 0) return true;
    if (product > limit / s) return false;
    product *= s;
  }
  return product <= limit;
}

// Odometer over [0, sizes[0]) x ... ; visits nothing if any size is zero.
void enumerate(std::span<const std::size_t> sizes,
               const std::function<void(std::span<const std::size_t>)>& visit) {
  for (std::size_t s : sizes) {
    if (s == 0) return;
  }
  std::vector<std::size_t> idx(sizes.size(), 0);
  while (true) {
    visit(idx);
    std::size_t p = idx.size();
    while (p > 0) {
      --p;
      if (++idx[p] < sizes[p]) break;
      idx[p] = 0;
      if (p == 0) return;
    }
    if (idx.empty()) return;
  }
}

}  // namespace

bool for_each_index_tuple(std::span<const std::size_t> sizes, Sampler& sampler,
                          const std::function<void(std::span<const std::size_t>)>& visit) {
  if (within_limit(sizes, sampler.policy().exhaustive_limit)) {
    enumerate(sizes, visit);
    return true;
  }
  std::vector<std::size_t> idx(sizes.size());
  for (std::size_t s = 0; s < sampler.policy().random_samples; ++s) {
    for (std::size_t p = 0; p < sizes.size(); ++p) idx[p] = sampler.below(sizes[p]);
    visit(idx);
  }
  return false;
}

bool for_each_instance(const Operad& op, std::span<const std::size_t> arities, Sampler& sampler,
                       const InstanceCallback& visit) {
  std::vector<std::size_t> dims;
  for (std::size_t a : arities) dims.push_back(op.dimension(a));
  std::vector<OperadElement> elems(arities.size());
  if (within_limit(dims, sampler.policy().exhaustive_limit)) {
    enumerate(dims, [&](std::span<const std::size_t> idx) {
      for (std::size_t p = 0; p < idx.size(); ++p) elems[p] = op.basis_element(arities[p], idx[p]);
      visit(elems);
    });
    return true;
  }
  for (std::size_t s = 0; s < sampler.policy().random_samples; ++s) {
    for (std::size_t p = 0; p < arities.size(); ++p) elems[p] = sampler.random_element(op, arities[p]);
    visit(elems);
  }
  return false;
}

}  // namespace operadkit
