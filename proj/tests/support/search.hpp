#pragma once

// Exhaustive small-entry searches for structures with nonzero solutions.

#include <cstdint>
#include <vector>

#include "oracles.hpp"
#include "operadkit/family.hpp"
#include "operadkit/semigroup.hpp"

namespace operadkit::oracle {

/// Every associative product on A = k^2 whose structure constants lie in {-1, 0, 1}.
std::vector<OperadElement> associative_products(const EndOperad& end);

/// First product with entries in {-1, 0, 1} that fails associativity.
OperadElement non_associative_product(const EndOperad& end);

/// Every nonzero linear map with entries in {-1, 0, 1} that is Rota-Baxter of the given weight for pi.
std::vector<OperadElement> rota_baxter_search(const EndOperad& end, const OperadElement& pi,
                                             const Rational& weight = 0);

/// Nonzero Rota-Baxter families {R_a} with each R_a having entries in {-1, 0, 1}.
std::vector<OperatorFamily> rota_baxter_family_search(const EndOperad& end, const Semigroup& omega,
                                                      const OperadElement& pi, std::size_t limit);

/// Scalar tridendriform triples (a, b, c) on A = k with entries in {-1, 0, 1}, excluding zero.
std::vector<TriDendTriple> scalar_tridendriform_search(const EndOperad& end);

/// Pairs of associative products, split by compatibility, at most `limit` of each.
struct PairSearch {
  std::vector<std::pair<OperadElement, OperadElement>> compatible;
  std::vector<std::pair<OperadElement, OperadElement>> incompatible;
};
PairSearch multiplication_pairs(const EndOperad& end, std::size_t limit);

}  // namespace operadkit::oracle
