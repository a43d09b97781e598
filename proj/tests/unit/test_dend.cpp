#include <gtest/gtest.h>

#include "operadkit/axioms.hpp"
#include "operadkit/dend.hpp"
#include "operadkit/errors.hpp"
#include "operadkit/structure.hpp"
#include "oracles.hpp"
#include "search.hpp"

using namespace operadkit;
namespace o = operadkit::oracle;

namespace {

BoxIndex box(std::size_t v, std::size_t ambient) { return {v, ambient}; }

std::shared_ptr<const EndOperad> end2() { return end_operad(FiniteModule::standard(2), 4); }

OperadElement r_dual(const EndOperad& end) {
  // R(1) = eps, R(eps) = 0.
  return o::unary_from_matrix(end, {{0, 1}, {0, 0}});
}

}  // namespace

TEST(BoxMaps, R0Examples) {
  EXPECT_EQ(r0_map(2, 2, 1, 2), box(1, 2));
  EXPECT_EQ(r0_map(2, 2, 1, 3), box(2, 2));
  EXPECT_EQ(r0_map(3, 2, 2, 1), box(1, 3));
  EXPECT_EQ(r0_map(3, 2, 2, 2), box(2, 3));
  EXPECT_EQ(r0_map(3, 2, 2, 3), box(2, 3));
  EXPECT_EQ(r0_map(3, 2, 2, 4), box(3, 3));
  for (std::size_t i = 2; i <= 3; ++i) EXPECT_EQ(r0_map(3, 2, i, 1), box(1, 3));
  EXPECT_THROW(r0_map(2, 2, 3, 1), std::out_of_range);
  EXPECT_THROW(r0_map(2, 2, 1, 4), std::out_of_range);
}

TEST(BoxMaps, RiExamples) {
  EXPECT_EQ(std::get<BoxIndex>(ri_map(2, 2, 1, 1)), box(1, 2));
  EXPECT_EQ(std::get<BoxIndex>(ri_map(2, 2, 1, 2)), box(2, 2));
  EXPECT_EQ(std::get<FormalSum>(ri_map(2, 2, 1, 3)), FormalSum::all(2));
  EXPECT_EQ(std::get<BoxIndex>(ri_map(3, 2, 2, 2)), box(1, 2));
  EXPECT_EQ(std::get<BoxIndex>(ri_map(3, 2, 2, 3)), box(2, 2));
  EXPECT_EQ(std::get<FormalSum>(ri_map(3, 2, 2, 1)), FormalSum::all(2));
  EXPECT_EQ(std::get<FormalSum>(ri_map(3, 2, 2, 4)), FormalSum::all(2));
  // n = 1: both branches give [1].
  for (std::size_t r = 1; r <= 3; ++r) {
    const BoxOrSum v = ri_map(3, 1, 2, r);
    if (const auto* b = std::get_if<BoxIndex>(&v)) {
      EXPECT_EQ(b->value, 1u);
    } else {
      EXPECT_EQ(std::get<FormalSum>(v).values, std::vector<std::size_t>{1});
    }
  }
}

TEST(DendOperad, OperadAxioms) {
  const auto dend = dend_operad(end2());
  const CheckReport report = check_operad_axioms(*dend, 3);
  EXPECT_TRUE(report.ok());
}

TEST(DendOperad, UnitKeepsComponents) {
  const auto end = end2();
  const auto dend = dend_operad(end);
  const auto f = dend->pack(o::small_elements(*end, 3, 3, 4));
  for (std::size_t i = 1; i <= 3; ++i) EXPECT_EQ(dend->compose(f, i, dend->identity()), f);
  EXPECT_EQ(dend->compose(dend->identity(), 1, f), f);
}

TEST(DendOperad, SecondComponentOfAssociator) {
  const auto end = end2();
  const auto dend = dend_operad(end);
  const auto parts = o::small_elements(*end, 2, 2, 9);
  const OperadElement pi = dend->pack(parts);
  const OperadElement defect = dend->compose(pi, 1, pi) - dend->compose(pi, 2, pi);
  EXPECT_EQ(dend->component(defect, 2), end->compose(parts[0], 1, parts[1]) - end->compose(parts[1], 2, parts[0]));
}

TEST(Dendriform, Examples) {
  const auto end = end2();
  EXPECT_TRUE(is_dendriform_multiplication(*end, end->zero(2), end->zero(2)));
  for (const auto& pi : o::associative_products(*end)) {
    ASSERT_TRUE(is_dendriform_multiplication(*end, end->zero(2), pi));
    ASSERT_TRUE(is_dendriform_multiplication(*end, pi, end->zero(2)));
  }
  const OperadElement bad = o::non_associative_product(*end);
  EXPECT_FALSE(is_dendriform_multiplication(*end, end->zero(2), bad));
}

TEST(RotaBaxter, Examples) {
  const auto one = end_operad(FiniteModule::standard(1), 3);
  const OperadElement pi1 = one->element(2, {{{0, 0}, 0, 1}});
  EXPECT_TRUE(is_rota_baxter_element(*one, pi1, one->zero(1)));
  EXPECT_FALSE(is_rota_baxter_element(*one, pi1, one->identity()));
  EXPECT_THROW(split_by_rota_baxter(*one, pi1, one->identity()), PreconditionFailure);
  EXPECT_EQ(split_by_rota_baxter(*one, pi1, one->zero(1)), std::make_pair(one->zero(2), one->zero(2)));

  const auto end = end2();
  EXPECT_THROW(is_rota_baxter_element(*end, o::non_associative_product(*end), end->zero(1)), PreconditionFailure);
  const OperadElement dual = o::product_from_table(*end, o::dual_numbers());
  EXPECT_TRUE(is_rota_baxter_element(*end, dual, r_dual(*end)));
}

TEST(RotaBaxter, SearchedInstancesSplitIntoDendriform) {
  const auto end = end2();
  std::size_t found = 0;
  for (const auto& pi : o::associative_products(*end)) {
    for (const auto& R : o::rota_baxter_search(*end, pi)) {
      const auto [prec, succ] = split_by_rota_baxter(*end, pi, R);
      ASSERT_TRUE(is_dendriform_multiplication(*end, prec, succ)) << end->describe(R);
      ASSERT_TRUE(is_multiplication(*end, prec + succ));
      ++found;
    }
  }
  EXPECT_GT(found, 0u);
}

TEST(RotaBaxter, ProductFieldHasOnlyZeroOperators) {
  const auto end = end2();
  EXPECT_TRUE(o::rota_baxter_search(*end, o::product_from_table(*end, o::product_field())).empty());
}

TEST(Tridendriform, ZeroOdotReducesToDendriform) {
  const auto end = end2();
  const OperadElement dual = o::product_from_table(*end, o::dual_numbers());
  const auto [prec, succ] = split_by_rota_baxter(*end, dual, r_dual(*end));
  EXPECT_TRUE(is_tridendriform_multiplication(*end, {prec, succ, end->zero(2)}));
  const auto bad = o::small_elements(*end, 2, 2, 77);
  EXPECT_EQ(is_tridendriform_multiplication(*end, {bad[0], bad[1], end->zero(2)}),
            is_dendriform_multiplication(*end, bad[0], bad[1]));
  EXPECT_EQ(tridend_to_dend(*end, {prec, succ, end->zero(2)}), std::make_pair(prec, succ));
}

TEST(Tridendriform, OdotOnly) {
  const auto end = end2();
  for (const auto& pi : o::associative_products(*end)) {
    const TriDendTriple t{end->zero(2), end->zero(2), pi};
    ASSERT_TRUE(is_tridendriform_multiplication(*end, t));
    const auto [p, s] = tridend_to_dend(*end, t);
    EXPECT_EQ(p, pi);
    EXPECT_TRUE(s.is_zero());
    EXPECT_TRUE(is_dendriform_multiplication(*end, p, s));
  }
}

TEST(Tridendriform, ScalarSearch) {
  const auto one = end_operad(FiniteModule::standard(1), 3);
  const auto triples = o::scalar_tridendriform_search(*one);
  ASSERT_FALSE(triples.empty());
  bool has_all_nonzero = false;
  for (const auto& t : triples) {
    EXPECT_TRUE(is_multiplication(*one, t.prec + t.succ + t.odot));
    const auto [p, s] = tridend_to_dend(*one, t);
    EXPECT_TRUE(is_dendriform_multiplication(*one, p, s));
    has_all_nonzero = has_all_nonzero || (!t.prec.is_zero() && !t.succ.is_zero() && !t.odot.is_zero());
  }
  EXPECT_TRUE(has_all_nonzero);
}

TEST(Tridendriform, WeightedRotaBaxterInstances) {
  const auto end = end2();
  std::size_t found = 0;
  for (const auto& pi : o::associative_products(*end)) {
    for (const auto& R : o::rota_baxter_search(*end, pi, 1)) {
      const TriDendTriple t = tridend_from_rota_baxter(*end, pi, R, 1);
      ASSERT_TRUE(is_tridendriform_multiplication(*end, t));
      ASSERT_TRUE(is_multiplication(*end, t.prec + t.succ + t.odot));
      const auto [p, s] = tridend_to_dend(*end, t);
      ASSERT_TRUE(is_dendriform_multiplication(*end, p, s));
      ++found;
    }
  }
  EXPECT_GT(found, 0u);
}

TEST(TotalMorphism, MorphismAndChainMap) {
  const auto end = end2();
  const auto dend = dend_operad(end);
  const OperadMorphism phi = total_morphism(dend);
  const auto f = o::small_elements(*end, 1, 1, 2)[0];
  EXPECT_EQ(phi(dend->pack({f})), f);
  EXPECT_TRUE(check_morphism(phi, 3).ok());

  const OperadElement dual = o::product_from_table(*end, o::dual_numbers());
  const auto [prec, succ] = split_by_rota_baxter(*end, dual, r_dual(*end));
  const OperadElement pi = dend->pack({prec, succ});
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto g = dend->pack(o::small_elements(*end, n, n, 40 + n));
    EXPECT_EQ(differential(*end, phi(pi), phi(g)), phi(differential(*dend, pi, g)));
  }
}
