#include "search.hpp"

#include <optional>

#include "operadkit/comp.hpp"
#include "operadkit/dend.hpp"
#include "operadkit/structure.hpp"

namespace operadkit::oracle {

namespace {

const std::vector<std::int64_t> kSmall{-1, 0, 1};

OperadElement element_from_word(const EndOperad& end, std::size_t arity, const std::vector<std::int64_t>& word) {
  std::vector<SparseVector::Entry> entries;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] != 0) entries.emplace_back(i, Rational(static_cast<long>(word[i])));
  }
  return {arity, SparseVector::from_entries(std::move(entries))};
}

}  // namespace

std::vector<OperadElement> associative_products(const EndOperad& end) {
  std::vector<OperadElement> out;
  for_each_word(end.dimension(2), kSmall, [&](const std::vector<std::int64_t>& w) {
    OperadElement pi = element_from_word(end, 2, w);
    if (is_multiplication(end, pi)) out.push_back(std::move(pi));
  });
  return out;
}

OperadElement non_associative_product(const EndOperad& end) {
  std::optional<OperadElement> found;
  for_each_word(end.dimension(2), kSmall, [&](const std::vector<std::int64_t>& w) {
    if (found) return;
    OperadElement pi = element_from_word(end, 2, w);
    if (!is_multiplication(end, pi)) found = std::move(pi);
  });
  return *found;
}

std::vector<OperadElement> rota_baxter_search(const EndOperad& end, const OperadElement& pi,
                                             const Rational& weight) {
  std::vector<OperadElement> out;
  for_each_word(end.dimension(1), kSmall, [&](const std::vector<std::int64_t>& w) {
    OperadElement R = element_from_word(end, 1, w);
    if (!R.is_zero() && is_rota_baxter_element(end, pi, R, weight)) out.push_back(std::move(R));
  });
  return out;
}

std::vector<OperatorFamily> rota_baxter_family_search(const EndOperad& end, const Semigroup& omega,
                                                      const OperadElement& pi, std::size_t limit) {
  std::vector<OperatorFamily> out;
  const std::size_t d1 = end.dimension(1);
  for_each_word(d1 * omega.order(), kSmall, [&](const std::vector<std::int64_t>& w) {
    if (out.size() >= limit) return;
    OperatorFamily R;
    bool nonzero = false;
    for (std::size_t a = 0; a < omega.order(); ++a) {
      R.push_back(element_from_word(end, 1, std::vector<std::int64_t>(w.begin() + a * d1,
                                                                      w.begin() + (a + 1) * d1)));
      nonzero = nonzero || !R.back().is_zero();
    }
    if (nonzero && is_rota_baxter_family(end, omega, pi, R)) out.push_back(std::move(R));
  });
  return out;
}

std::vector<TriDendTriple> scalar_tridendriform_search(const EndOperad& end) {
  std::vector<TriDendTriple> out;
  for_each_word(3, kSmall, [&](const std::vector<std::int64_t>& w) {
    if (w[0] == 0 && w[1] == 0 && w[2] == 0) return;
    TriDendTriple t{element_from_word(end, 2, {w[0]}), element_from_word(end, 2, {w[1]}),
                    element_from_word(end, 2, {w[2]})};
    if (is_tridendriform_multiplication(end, t)) out.push_back(std::move(t));
  });
  return out;
}

PairSearch multiplication_pairs(const EndOperad& end, std::size_t limit) {
  const std::vector<OperadElement> products = associative_products(end);
  PairSearch out;
  for (std::size_t i = 0; i < products.size(); ++i) {
    for (std::size_t j = i; j < products.size(); ++j) {
      const bool compatible = is_compatible_pair(end, products[i], products[j]);
      auto& bucket = compatible ? out.compatible : out.incompatible;
      if (bucket.size() < limit) bucket.emplace_back(products[i], products[j]);
      if (out.compatible.size() >= limit && out.incompatible.size() >= limit) return out;
    }
  }
  return out;
}

}  // namespace operadkit::oracle
