#include <gtest/gtest.h>

#include "operadkit/axioms.hpp"
#include "operadkit/end_operad.hpp"
#include "operadkit/errors.hpp"
#include "operadkit/morphism.hpp"
#include "operadkit/structure.hpp"
#include "oracles.hpp"
#include "search.hpp"

using namespace operadkit;
namespace t = operadkit::oracle;

namespace {

OperadElement scalar(const EndOperad& end, std::size_t arity, long value) {
  std::vector<std::size_t> zeros(arity, 0);
  return end.element(arity, {{zeros, 0, Rational(value)}});
}

// End_A with an extra term added to every second-slot composition.
class CorruptedEnd final : public Operad {
 public:
  explicit CorruptedEnd(std::shared_ptr<const EndOperad> base) : Operad(base->max_arity()), base_(std::move(base)) {}
  std::string name() const override { return "corrupted"; }
  std::size_t dimension(std::size_t arity) const override { return base_->dimension(arity); }
  OperadElement identity() const override { return base_->identity(); }

 protected:
  OperadElement compose_unchecked(const OperadElement& f, std::size_t slot, const OperadElement& g) const override {
    OperadElement out = base_->compose(f, slot, g);
    if (slot == 2) out += base_->basis_element(out.arity, 0);
    return out;
  }

 private:
  std::shared_ptr<const EndOperad> base_;
};

}  // namespace

TEST(EndOperad, OneDimensionalCompositionIsScalarProduct) {
  const auto end = end_operad(FiniteModule::standard(1), 4);
  EXPECT_EQ(end->compose(scalar(*end, 2, 2), 1, scalar(*end, 2, 3)), scalar(*end, 3, 6));
  EXPECT_EQ(end->compose(scalar(*end, 2, 2), 2, scalar(*end, 2, 5)), scalar(*end, 3, 10));
}

TEST(EndOperad, UnitLaws) {
  const auto end = end_operad(FiniteModule::standard(2), 4);
  for (std::size_t arity = 1; arity <= 3; ++arity) {
    for (const auto& f : t::small_elements(*end, arity, 5, arity)) {
      EXPECT_EQ(end->compose(end->identity(), 1, f), f);
      for (std::size_t i = 1; i <= arity; ++i) EXPECT_EQ(end->compose(f, i, end->identity()), f);
    }
  }
}

TEST(EndOperad, CompositionMatchesSubstitutionOracle) {
  const auto end = end_operad(FiniteModule::standard(2), 5);
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto fs = t::small_elements(*end, m, 3, 10 * m + n);
      const auto gs = t::small_elements(*end, n, 3, 100 * m + n);
      for (std::size_t k = 0; k < fs.size(); ++k) {
        for (std::size_t i = 1; i <= m; ++i) {
          const auto expected = t::substitute(t::to_tensor(*end, fs[k]), i, t::to_tensor(*end, gs[k]));
          EXPECT_TRUE(t::equal(t::to_tensor(*end, end->compose(fs[k], i, gs[k])), expected));
        }
      }
    }
  }
}

TEST(EndOperad, SequentialAxiomOnRandomElements) {
  const auto end = end_operad(FiniteModule::standard(2), 5);
  const auto f = t::small_elements(*end, 2, 4, 1);
  const auto g = t::small_elements(*end, 2, 4, 2);
  const auto h = t::small_elements(*end, 2, 4, 3);
  for (std::size_t k = 0; k < f.size(); ++k) {
    EXPECT_EQ(end->compose(end->compose(f[k], 1, g[k]), 2, h[k]),
              end->compose(f[k], 1, end->compose(g[k], 2, h[k])));
    // Parallel: (f o_1 g) o_3 h = (f o_2 h) o_1 g.
    EXPECT_EQ(end->compose(end->compose(f[k], 1, g[k]), 3, h[k]),
              end->compose(end->compose(f[k], 2, h[k]), 1, g[k]));
  }
}

TEST(EndOperad, ComponentwiseProductOnBasisTriple) {
  const auto end = end_operad(FiniteModule::standard(2), 4);
  const OperadElement pi = t::product_from_table(*end, t::product_field());
  const OperadElement left = end->compose(pi, 1, pi);
  const std::vector<SparseVector> args(3, SparseVector::unit(0));
  EXPECT_EQ(end->apply(left, args), SparseVector::unit(0));
  EXPECT_EQ(left, end->compose(pi, 2, pi));
}

TEST(EndOperad, ErrorsNameTheProblem) {
  const auto end = end_operad(FiniteModule::standard(2), 3);
  const auto f = t::small_elements(*end, 2, 1, 5)[0];
  EXPECT_THROW(end->compose(f, 3, f), SlotOutOfRange);
  EXPECT_THROW(end->compose(end->compose(f, 1, f), 1, f), ArityOverflow);
  EXPECT_THROW(f + end->identity(), DimensionMismatch);
  EXPECT_THROW(end_operad(FiniteModule::standard(2), 1), std::invalid_argument);
}

TEST(Axioms, EndOperadPassesExhaustively) {
  for (std::size_t d = 1; d <= 2; ++d) {
    const auto end = end_operad(FiniteModule::standard(d), 4);
    const CheckReport report = check_operad_axioms(*end, 4);
    EXPECT_TRUE(report.ok()) << report.violations().front().instance;
    EXPECT_TRUE(report.exhaustive());
    EXPECT_GT(report.checked(), 0u);
  }
}

TEST(Axioms, CorruptedCompositionIsReported) {
  const auto bad = std::make_shared<CorruptedEnd>(end_operad(FiniteModule::standard(2), 3));
  const CheckReport report = check_operad_axioms(*bad, 3);
  EXPECT_FALSE(report.ok());
  ASSERT_FALSE(report.violations().empty());
  EXPECT_FALSE(report.violations().front().instance.empty());
}

TEST(Axioms, CapBeyondWindowThrows) {
  const auto end = end_operad(FiniteModule::standard(1), 3);
  EXPECT_THROW(check_operad_axioms(*end, 4), ArityOverflow);
}

TEST(Bracket, VanishesAtDimensionOne) {
  const auto end = end_operad(FiniteModule::standard(1), 4);
  EXPECT_TRUE(gerstenhaber_bracket(*end, scalar(*end, 2, 2), scalar(*end, 2, 7)).is_zero());
}

TEST(Bracket, MultiplicationIsMaurerCartan) {
  const auto end = end_operad(FiniteModule::standard(2), 4);
  for (const auto& pi : t::associative_products(*end)) {
    ASSERT_TRUE(gerstenhaber_bracket(*end, pi, pi).is_zero()) << end->describe(pi);
  }
}

TEST(Bracket, MatchesTermByTermExpansion) {
  const auto end = end_operad(FiniteModule::standard(2), 5);
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n + m <= 4; ++n) {
      const auto fs = t::small_elements(*end, m, 3, 7 * m + n);
      const auto gs = t::small_elements(*end, n, 3, 13 * m + n);
      for (std::size_t k = 0; k < fs.size(); ++k) {
        const auto expected = t::bracket_by_terms(t::to_tensor(*end, fs[k]), t::to_tensor(*end, gs[k]));
        EXPECT_TRUE(t::equal(t::to_tensor(*end, gerstenhaber_bracket(*end, fs[k], gs[k])), expected));
      }
    }
  }
}

TEST(Bracket, GradedAntisymmetry) {
  const auto end = end_operad(FiniteModule::standard(2), 5);
  const auto f = t::small_elements(*end, 2, 3, 4);
  const auto g = t::small_elements(*end, 3, 3, 9);
  for (std::size_t k = 0; k < f.size(); ++k) {
    // (m-1)(n-1) = 2 here, so the bracket is antisymmetric.
    EXPECT_EQ(gerstenhaber_bracket(*end, f[k], g[k]), -gerstenhaber_bracket(*end, g[k], f[k]));
  }
}

TEST(Cup, ScalarExample) {
  const auto end = end_operad(FiniteModule::standard(1), 3);
  const auto got = cup_product(*end, scalar(*end, 2, 1), scalar(*end, 1, 2), scalar(*end, 1, 3));
  EXPECT_EQ(got, scalar(*end, 2, 6));
  EXPECT_TRUE(cup_product(*end, scalar(*end, 2, 1), scalar(*end, 1, 2), end->zero(1)).is_zero());
}

TEST(Cup, UnitWithUnitGivesProduct) {
  // (-1)^{1*1+1} (pi o_2 1) o_1 1 = pi.
  const auto end = end_operad(FiniteModule::standard(2), 3);
  const OperadElement pi = t::product_from_table(*end, t::product_field());
  EXPECT_EQ(cup_product(*end, pi, end->identity(), end->identity()), pi);
}

TEST(Multiplication, Examples) {
  const auto one = end_operad(FiniteModule::standard(1), 3);
  for (long c = -3; c <= 3; ++c) EXPECT_TRUE(is_multiplication(*one, scalar(*one, 2, c)));

  const auto end = end_operad(FiniteModule::standard(2), 3);
  EXPECT_TRUE(is_multiplication(*end, t::product_from_table(*end, t::product_field())));
  EXPECT_TRUE(is_multiplication(*end, t::product_from_table(*end, t::dual_numbers())));
  const OperadElement bad = t::non_associative_product(*end);
  EXPECT_FALSE(is_multiplication(*end, bad));
  EXPECT_FALSE(associator(*end, bad).is_zero());
  EXPECT_THROW(is_multiplication(*end, end->identity()), PreconditionFailure);
}

TEST(Morphism, IdentityPasses) {
  const auto end = end_operad(FiniteModule::standard(2), 3);
  const CheckReport report = check_morphism(identity_morphism(end), 3);
  EXPECT_TRUE(report.ok());
}
