#include <gtest/gtest.h>

#include "graded_examples.hpp"
#include "operadkit/dend.hpp"
#include "operadkit/errors.hpp"
#include "operadkit/family.hpp"
#include "operadkit/homotopy.hpp"
#include "oracles.hpp"
#include "search.hpp"

using namespace operadkit;
namespace o = operadkit::oracle;

namespace {

struct HomotopyFixture : ::testing::Test {
  std::shared_ptr<const EndOperad> end = end_operad(FiniteModule::standard(2), 4);
  OperadElement dual = o::product_from_table(*end, o::dual_numbers());
  OperadElement R = o::unary_from_matrix(*end, {{0, 1}, {0, 0}});
  Semigroup omega = Semigroup::left_zero(2);
  DendFamily fam = rb_family_split(*end, omega, dual, {R, Rational(-1) * R});
  GradedModule graded{{"u", "e"}, {0, 1}};
};

std::size_t violations_with_prefix(const CheckReport& r, const std::string& prefix) {
  std::size_t n = 0;
  for (const auto& v : r.violations()) n += v.rule.rfind(prefix, 0) == 0;
  return n;
}

}  // namespace

TEST(InsertionSign, DegreeZeroArityThree) {
  const std::vector<int> zero{0, 0, 0};
  EXPECT_EQ(insertion_sign(1, 2, zero), -1);  // (ab)c
  EXPECT_EQ(insertion_sign(2, 2, zero), 1);   // a(bc)
  const std::vector<int> graded{1, 0};
  EXPECT_EQ(insertion_sign(2, 1, graded), -1);  // a mu1(b) with |a| = 1
  EXPECT_EQ(insertion_sign(1, 1, graded), 1);
}

TEST_F(HomotopyFixture, ZeroStructuresPass) {
  const HomotopyFamilyOps zero(graded, omega, 3);
  const CheckReport a = check_ainf_relative(zero, 4);
  EXPECT_TRUE(a.ok());
  EXPECT_TRUE(a.exhaustive());
  const DendInfFamilyOps dzero(graded, omega, 3);
  EXPECT_TRUE(check_dendinf_family(dzero, 4).ok());
  EXPECT_TRUE(zero.is_zero());
}

TEST_F(HomotopyFixture, CapIsEnforced) {
  const HomotopyFamilyOps zero(graded, omega, 2);
  EXPECT_NO_THROW(check_ainf_relative(zero, 3));
  EXPECT_THROW(check_ainf_relative(zero, 4), std::invalid_argument);
  EXPECT_THROW(HomotopyFamilyOps(graded, omega, 0), std::invalid_argument);
}

TEST_F(HomotopyFixture, DegreeZeroRelativeAlgebra) {
  const RelativeProducts dots = family_to_relative(*end, omega, fam);
  const HomotopyFamilyOps ops = ainf_from_relative(*end, omega, dots, 3);
  EXPECT_TRUE(check_ainf_relative(ops, 4).ok());

  RelativeProducts broken = dots;
  broken.dot[0] = o::non_associative_product(*end);
  ASSERT_FALSE(is_relative_associative(*end, omega, broken));
  const CheckReport bad = check_ainf_relative(ainf_from_relative(*end, omega, broken, 3), 4);
  EXPECT_FALSE(bad.ok());
  EXPECT_GT(violations_with_prefix(bad, "ainf-N3"), 0u);
  EXPECT_EQ(violations_with_prefix(bad, "ainf-N2"), 0u);
}

TEST_F(HomotopyFixture, DegreeZeroDendriformFamily) {
  const DendInfFamilyOps ops = dendinf_from_family(*end, omega, fam, 3);
  EXPECT_TRUE(check_dendinf_family(ops, 4).ok());

  // Singleton Omega with a dendriform pair.
  const auto [prec, succ] = split_by_rota_baxter(*end, dual, R);
  const DendFamily single{{prec}, {succ}};
  EXPECT_TRUE(check_dendinf_family(dendinf_from_family(*end, Semigroup::singleton(), single, 2), 3).ok());

  const auto random = o::small_elements(*end, 2, 2, 5);
  ASSERT_FALSE(is_dendriform_multiplication(*end, random[0], random[1]));
  const CheckReport bad =
      check_dendinf_family(dendinf_from_family(*end, Semigroup::singleton(), DendFamily{{random[0]}, {random[1]}}, 2), 3);
  EXPECT_FALSE(bad.ok());
  EXPECT_GT(violations_with_prefix(bad, "dendinf-N3"), 0u);
  EXPECT_NE(bad.violations().front().instance.find("r="), std::string::npos);
}

TEST_F(HomotopyFixture, TotalAndTensorRevalidate) {
  const DendInfFamilyOps ops = dendinf_from_family(*end, omega, fam, 3);
  const HomotopyFamilyOps total = dendinf_total(ops, 4);
  EXPECT_TRUE(check_ainf_relative(total, 4).ok());
  EXPECT_EQ(total, ainf_from_relative(*end, omega, family_to_relative(*end, omega, fam), 3));

  const DendInfFamilyOps tensor = dendinf_tensor_omega(ops, 4);
  EXPECT_TRUE(check_dendinf_family(tensor, 4).ok());
  const TensorDendriform td = family_to_dendriform(*end, omega, fam);
  const std::array<std::size_t, 1> e{0};
  EXPECT_EQ(tensor.eta_reduced(2, 1, e), to_multilinear(*td.end, td.prec));
  EXPECT_EQ(tensor.eta_reduced(2, 2, e), to_multilinear(*td.end, td.succ));

  DendInfFamilyOps broken = ops;
  const std::array<std::size_t, 1> a{1};
  broken.eta_reduced_mut(2, 1, a) = to_multilinear(*end, o::non_associative_product(*end));
  EXPECT_THROW(dendinf_total(broken, 3), PreconditionFailure);
}

TEST_F(HomotopyFixture, GradedDifferentialAlgebra) {
  const HomotopyFamilyOps d = o::unit_dga(3);
  EXPECT_TRUE(check_ainf_relative(d, 5).ok());

  // u e = 0 breaks mu1(u e) = mu1(u) e + u mu1(e) = u.
  const HomotopyFamilyOps broken = o::two_dim_graded(3, 1, 1, 0, 1, 0);
  const CheckReport bad = check_ainf_relative(broken, 3);
  EXPECT_FALSE(bad.ok());
  EXPECT_GT(violations_with_prefix(bad, "ainf-N2"), 0u);

  // e u = -e breaks the signed rule on (e, e): mu1(e) e - e mu1(e) = 2e.
  EXPECT_FALSE(check_ainf_relative(o::two_dim_graded(3, 1, 1, 1, -1, 0), 2).ok());
}

TEST_F(HomotopyFixture, WrongDegreeIsRejected) {
  HomotopyFamilyOps ops(graded, Semigroup::singleton(), 2);
  const std::array<std::size_t, 2> in{0, 0};
  ops.mu_mut(2).add(in, 1, Rational(1));  // u u -> e raises degree
  EXPECT_THROW(ops.validate(), DegreeError);
  EXPECT_THROW(check_ainf_relative(ops, 2), DegreeError);
}

TEST_F(HomotopyFixture, HomotopyRotaBaxterFamily) {
  const HomotopyFamilyOps ops = o::dual_tensor_dga(3);
  ASSERT_TRUE(check_ainf_relative(ops, 5).ok());
  const HomotopyRBFamily Rf{o::dual_tensor_rb(1), o::dual_tensor_rb(-1)};
  const CheckReport report = check_homotopy_rb_family(ops, omega, Rf, 3);
  EXPECT_TRUE(report.ok());

  const DendInfFamilyOps split = homotopy_rb_split(ops, omega, Rf);
  EXPECT_FALSE(split.is_zero());
  EXPECT_TRUE(check_dendinf_family(split, 4).ok());
  EXPECT_TRUE(check_ainf_relative(dendinf_total(split, 4), 4).ok());

  // The identity is not Rota-Baxter for a nonzero product.
  MultilinearMap id(1, 4);
  for (std::size_t x = 0; x < 4; ++x) {
    const std::array<std::size_t, 1> in{x};
    id.add(in, x, Rational(1));
  }
  const CheckReport bad = check_homotopy_rb_family(ops, omega, {id, id}, 3);
  EXPECT_FALSE(bad.ok());
  EXPECT_THROW(homotopy_rb_split(ops, omega, {id, id}), PreconditionFailure);
}

TEST_F(HomotopyFixture, DegreeZeroRotaBaxterAgreesWithOrdinary) {
  HomotopyFamilyOps ops(degree_zero_module(*end), Semigroup::singleton(), 2);
  ops.mu_mut(2) = to_multilinear(*end, dual);
  const OperatorFamily plain{R, Rational(2) * R};
  const HomotopyRBFamily lifted{to_multilinear(*end, plain[0]), to_multilinear(*end, plain[1])};
  EXPECT_EQ(check_homotopy_rb_family(ops, omega, lifted, 2).ok(), is_rota_baxter_family(*end, omega, dual, plain));

  const DendInfFamilyOps split = homotopy_rb_split(ops, omega, lifted);
  const DendFamily expected = rb_family_split(*end, omega, dual, plain);
  for (std::size_t w = 0; w < 2; ++w) {
    const std::array<std::size_t, 1> t{w};
    EXPECT_EQ(split.eta_reduced(2, 1, t), to_multilinear(*end, expected.prec[w]));
    EXPECT_EQ(split.eta_reduced(2, 2, t), to_multilinear(*end, expected.succ[w]));
  }
}

TEST_F(HomotopyFixture, RequiresOrdinaryAinfinityInput) {
  const HomotopyFamilyOps fam_ops(graded, omega, 2);
  EXPECT_THROW(check_homotopy_rb_family(fam_ops, omega, {MultilinearMap(1, 2), MultilinearMap(1, 2)}, 2),
               std::invalid_argument);
  const HomotopyFamilyOps broken = o::two_dim_graded(2, 1, 1, 0, 1, 0);
  EXPECT_THROW(check_homotopy_rb_family(broken, omega, {MultilinearMap(1, 2), MultilinearMap(1, 2)}, 2),
               PreconditionFailure);
}
