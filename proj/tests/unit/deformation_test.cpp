#include <gtest/gtest.h>

#include "support.hpp"

namespace avla {
namespace {

using testing::diag;
using testing::Generator;
using testing::load_algebra;
using testing::load_deformation;
using testing::load_isomorphism;
using testing::load_operator;

// The order-1 deformation d' that ψ = id + tψ₁ carries onto the constant one.
TruncatedDeformation pulled_back(const LeibnizAlgebra& a, const AveragingOperator& t, const RatMatrix& psi1) {
  const std::size_t g = a.dim();
  TruncatedDeformation d = TruncatedDeformation::constant(a, t, 1);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      const RatVector v = a.bracket(psi1.column(i), RatMatrix::identity(g).column(j)) +
                          a.bracket(RatMatrix::identity(g).column(i), psi1.column(j)) -
                          psi1.apply(a.bracket_basis(i, j));
      for (std::size_t k = 0; k < g; ++k) d.mu[1].coeffs[(i * g + j) * g + k] = v[k];
    }
  }
  d.theta[1] = t.matrix() * psi1 - psi1 * t.matrix();
  return d;
}

FormalIsomorphism order_one(const RatMatrix& psi1) {
  FormalIsomorphism p = FormalIsomorphism::identity(psi1.rows(), 1);
  p.psi[1] = psi1;
  return p;
}

TEST(Deformation, ConstantDeformationsSatisfyEveryOrder) {
  for (const testing::Sample& s : testing::valid_corpus()) {
    const TruncatedDeformation d = TruncatedDeformation::constant(s.algebra, s.op, 5);
    EXPECT_TRUE(check_deformation_order(d).passed()) << s.name;
  }
}

TEST(Deformation, AbelianSquareTermIsNotIntegrable) {
  const TruncatedDeformation d1 = load_deformation("abelian1_def1.json");
  const TruncatedDeformation d2 = load_deformation("abelian1_def2.json");
  EXPECT_TRUE(check_deformation_order(d1).passed());
  const ValidationReport r = check_deformation_order(d2);
  ASSERT_FALSE(r.passed());
  const Witness& w = r.witnesses.front();
  EXPECT_EQ(w.order, 2);
  EXPECT_EQ(w.tag, "eq1");
  EXPECT_EQ(w.tuple, (std::vector<std::size_t>{0, 0, 0}));
  EXPECT_EQ(w.residual, (RatVector{-1}));
  EXPECT_TRUE(check_deformation_order(d2.truncated(1)).passed());
}

TEST(Deformation, AbelianSquareTermIsACocycle) {
  const LeibnizAlgebra a = load_algebra("abelian1.json").algebra;
  const AveragingOperator t = load_operator("zero_op.json");
  const TruncatedDeformation d = load_deformation("abelian1_def2.json");
  check_base(d, a, t);
  for (InducedMode mode : {InducedMode::Strict, InducedMode::Sum}) {
    const CocycleReport c = check_cocycle(a, t, d.mu[1], d.theta[1], mode);
    EXPECT_TRUE(c.report.passed());
    EXPECT_TRUE(c.delta_passed && c.operator_passed);
    // Not a coboundary: the cone differential out of degree 1 is zero on μ.
    EXPECT_FALSE(find_trivializer(a, t, d.mu[1], d.theta[1], mode).has_value());
  }
}

TEST(Deformation, ShapeAndBaseChecks) {
  const LeibnizAlgebra a = load_algebra("lie2.json").algebra;
  const AveragingOperator t = load_operator("lie2_id.json");
  TruncatedDeformation d = TruncatedDeformation::constant(a, t, 2);
  EXPECT_NO_THROW(check_base(d, a, t));
  EXPECT_THROW(check_base(d, a, load_operator("lie2_zero.json")), InvalidInput);
  EXPECT_THROW(check_base(d, LeibnizAlgebra::zero(2), t), InvalidInput);
  EXPECT_THROW(d.truncated(3), InvalidInput);
  d.theta.pop_back();
  EXPECT_THROW(d.check(), InvalidInput);
  FormalIsomorphism p = FormalIsomorphism::identity(2, 1);
  p.psi[0] = RatMatrix::scalar(2, Rational(2));
  EXPECT_THROW(p.check(), InvalidInput);
  EXPECT_EQ(algebra_of(bracket_cochain(a)), a);
}

TEST(Deformation, ShiftedFixtureIsEquivalentToTheConstantOne) {
  const LeibnizAlgebra a = load_algebra("lie2.json").algebra;
  const AveragingOperator t = load_operator("lie2_diag01.json");
  const TruncatedDeformation constant = load_deformation("lie2_diag01_const.json");
  const TruncatedDeformation shifted = load_deformation("lie2_diag01_shifted.json");
  const FormalIsomorphism psi = load_isomorphism("lie2_psi_e21.json");
  EXPECT_EQ(shifted, pulled_back(a, t, psi.psi[1]));
  EXPECT_TRUE(check_equivalence(constant, shifted, psi).passed());
  EXPECT_FALSE(check_equivalence(constant, constant, psi).passed());
  const std::optional<Trivializer> x = find_trivializer(a, t, shifted.mu[1], shifted.theta[1], InducedMode::Strict);
  ASSERT_TRUE(x.has_value());
  const auto [mu, theta] = cone_image(a, t, *x, InducedMode::Strict);
  EXPECT_EQ(mu, shifted.mu[1]);
  EXPECT_EQ(theta, shifted.theta[1]);
}

TEST(DeformationProperty, EquivalenceIsReflexive) {
  Generator gen(71);
  for (const testing::Sample& s : testing::random_samples(gen, 15, 4)) {
    TruncatedDeformation d = TruncatedDeformation::constant(s.algebra, s.op, 2);
    d.mu[1] = gen.cochain(2, s.algebra.dim(), s.algebra.dim());
    d.theta[1] = gen.matrix(s.algebra.dim(), s.algebra.dim());
    EXPECT_TRUE(check_equivalence(d, d, FormalIsomorphism::identity(s.algebra.dim(), 2)).passed()) << s.name;
  }
}

TEST(DeformationProperty, OrderOneEquivalenceIsSymmetric) {
  Generator gen(72);
  for (const testing::Sample& s : testing::random_samples(gen, 20, 4)) {
    const RatMatrix psi1 = gen.matrix(s.algebra.dim(), s.algebra.dim());
    const TruncatedDeformation d = TruncatedDeformation::constant(s.algebra, s.op, 1);
    const TruncatedDeformation d_prime = pulled_back(s.algebra, s.op, psi1);
    EXPECT_TRUE(check_equivalence(d, d_prime, order_one(psi1)).passed()) << s.name;
    EXPECT_TRUE(check_equivalence(d_prime, d, order_one(Rational(-1) * psi1)).passed()) << s.name;
    // A pulled-back deformation satisfies the order-1 equations.
    EXPECT_TRUE(check_deformation_order(d_prime).passed()) << s.name;
  }
}

TEST(DeformationProperty, OrderIsMonotone) {
  Generator gen(73);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t g = static_cast<std::size_t>(gen.integer(1, 2));
    TruncatedDeformation d = TruncatedDeformation::constant(LeibnizAlgebra::zero(g), AveragingOperator(RatMatrix(g, g)), 3);
    for (std::size_t i = 1; i <= 3; ++i) {
      d.mu[i] = gen.integer(0, 1) ? gen.cochain(2, g, g) : MultilinearMap::zero(2, g, g);
      d.theta[i] = gen.integer(0, 1) ? gen.matrix(g, g) : RatMatrix(g, g);
    }
    bool previous = true;
    for (std::size_t n = 0; n <= 3; ++n) {
      const bool ok = check_deformation_order(d.truncated(n)).passed();
      if (!previous) EXPECT_FALSE(ok);
      previous = ok;
    }
  }
}

// At order 1 the associativity-type equation is linear in μ₁ and cuts out
// the same subspace as δ²μ₁ = 0.
TEST(DeformationProperty, FirstEquationMatchesTheLeibnizCoboundary) {
  Generator gen(74);
  for (const testing::Sample& s : testing::random_samples(gen, 15, 3)) {
    const std::size_t g = s.algebra.dim();
    const RatMatrix eq1 = first_order_matrix(s.algebra, s.op, FirstOrderEquation::Eq1);
    RatMatrix mu_block(eq1.rows(), g * g * g);
    for (std::size_t r = 0; r < eq1.rows(); ++r) {
      for (std::size_t c = 0; c < eq1.cols(); ++c) {
        if (c < g * g * g) mu_block(r, c) = eq1(r, c);
        else EXPECT_TRUE(eq1(r, c).is_zero());
      }
    }
    const RatMatrix d2 = matrix_of(CochainOperator::Delta, 2, self_representation(s.algebra, s.op));
    const std::size_t r1 = rank(mu_block), r2 = rank(d2);
    EXPECT_EQ(r1, r2) << s.name;
    EXPECT_EQ(rank(RatMatrix::vstack(mu_block, d2)), r1) << s.name;
  }
}

TEST(DeformationProperty, TrivializerRoundTrip) {
  Generator gen(75);
  for (const testing::Sample& s : testing::random_samples(gen, 20, 3)) {
    const std::size_t g = s.algebra.dim();
    for (InducedMode mode : {InducedMode::Strict, InducedMode::Sum}) {
      const Trivializer x{gen.matrix(g, g), gen.vector(g)};
      const auto [mu, theta] = cone_image(s.algebra, s.op, x, mode);
      const std::optional<Trivializer> y = find_trivializer(s.algebra, s.op, mu, theta, mode);
      ASSERT_TRUE(y.has_value()) << s.name;
      const auto [mu2, theta2] = cone_image(s.algebra, s.op, *y, mode);
      EXPECT_EQ(mu2, mu);
      EXPECT_EQ(theta2, theta);
    }
  }
}

TEST(Deformation, RigidityVerdicts) {
  const LeibnizAlgebra ab = load_algebra("abelian1.json").algebra;
  const RigidityVerdict v = rigidity_report(ab, load_operator("id_op.json"), InducedMode::Strict);
  EXPECT_EQ(v.kind, RigidityVerdict::Kind::Inconclusive);
  EXPECT_EQ(v.h2, 1u);
  EXPECT_STREQ(to_string(v.kind), "inconclusive");
  const RigidityVerdict bad =
      rigidity_report(load_algebra("lie2.json").algebra, load_operator("lie2_id.json"), InducedMode::Strict);
  EXPECT_EQ(bad.kind, RigidityVerdict::Kind::ComplexInvalid);
  ASSERT_TRUE(bad.defect.has_value());
  EXPECT_GT(bad.defect->defect_rank, 0u);
}

TEST(Deformation, FirstOrderMatrixShapes) {
  const LeibnizAlgebra a = load_algebra("lie2.json").algebra;
  const AveragingOperator t = load_operator("lie2_diag01.json");
  EXPECT_EQ(first_order_matrix(a, t, FirstOrderEquation::Eq1).rows(), 16u);
  for (auto which : {FirstOrderEquation::LeftMiddle, FirstOrderEquation::LeftRight, FirstOrderEquation::Merged}) {
    const RatMatrix m = first_order_matrix(a, t, which);
    EXPECT_EQ(m.rows(), 8u);
    EXPECT_EQ(m.cols(), 12u);
  }
}

}  // namespace
}  // namespace avla
