#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "plk/error.hpp"
#include "plk/gln.hpp"
#include "plk/poisson.hpp"

namespace plk {
namespace {

const std::vector<std::string> kSmall = {"abelian:3", "aff1", "heisenberg3", "sl2", "gl:2"};

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

Polynomial sl2_casimir() {
  // eta_h^2 + 4 eta_e eta_f
  Polynomial p = Polynomial::variable(3, 0) * Polynomial::variable(3, 0);
  p.add_product(Polynomial::variable(3, 1), Polynomial::variable(3, 2), Scalar(4));
  return p;
}

TEST(QuadraticBeta, EnforcesSkewContract) {
  Tensor t(4, 2);
  t(0, 1, 0, 1) = 1;
  EXPECT_EQ(kind_of([&] { QuadraticBeta b(t); }), ErrorKind::NotSkew);
  t(1, 0, 1, 0) = -1;
  EXPECT_NO_THROW(QuadraticBeta b(t));
}

TEST(Bracket, LiePoissonWhenRIsZero) {
  for (const auto& name : kSmall) {
    const LieAlgebra g = builtin_algebra(name);
    const PoissonTensor omega = build_bracket(g, RMatrix::zero(g.dim()), InvariantTheta::one(g.dim()));
    EXPECT_EQ(omega, linear_bracket(g, InvariantTheta::one(g.dim())));
    EXPECT_TRUE(jacobi_residual(omega).is_zero()) << name;
    for (const auto& e : g.nonzeros()) EXPECT_EQ(omega(e.left, e.right).coefficient(Monomial::variable(e.upper)), e.value);
  }
}

TEST(Bracket, QuadraticPartIsTheSymmetrizedBeta) {
  std::mt19937_64 rng(31);
  for (const auto& name : kSmall) {
    const LieAlgebra g = builtin_algebra(name);
    const RMatrix r = testing::random_skew_r(rng, g.dim());
    const auto one = InvariantTheta::one(g.dim());
    const PoissonTensor full = build_bracket(g, r, one);
    const PoissonTensor quad = quadratic_bracket(g, build_beta(g, r));
    const PoissonTensor lin = linear_bracket(g, one);
    for (std::size_t k = 0; k < full.components().size(); ++k) {
      EXPECT_EQ(full.components()[k], lin.components()[k] + quad.components()[k]) << name;
    }
  }
}

TEST(Bracket, JacobiHoldsForCybeSolutions) {
  std::mt19937_64 rng(32);
  for (const auto& name : kSmall) {
    const LieAlgebra g = builtin_algebra(name);
    for (int k = 0; k < 4; ++k) {
      const RMatrix r = testing::random_cybe_r(rng, name);
      EXPECT_TRUE(jacobi_residual(build_bracket(g, r, InvariantTheta::one(g.dim()))).is_zero()) << name;
    }
  }
}

TEST(Bracket, JacobiHoldsWithCasimirTheta) {
  std::mt19937_64 rng(33);
  const LieAlgebra sl2 = builtin_algebra("sl2");
  const InvariantTheta theta = InvariantTheta::create(sl2, sl2_casimir());
  for (int k = 0; k < 4; ++k) {
    const RMatrix r = testing::random_cybe_r(rng, "sl2");
    EXPECT_TRUE(jacobi_residual(build_bracket(sl2, r, theta)).is_zero());
  }
}

TEST(Bracket, JacobiFailsOffCybeOnAProductAlgebra) {
  // aff1 + aff1 with r = e2 ^ e2' + e1 ^ e1': the CYBE fails and so does Jacobi.
  const LieAlgebra g = direct_sum(builtin_algebra("aff1"), builtin_algebra("aff1"));
  Tensor t(2, 4);
  t(1, 3) = 1;
  t(3, 1) = -1;
  t(0, 2) = 1;
  t(2, 0) = -1;
  const RMatrix r(t);
  ASSERT_FALSE(cybe_residual(g, r).is_zero());
  EXPECT_FALSE(beta_jacobi_residual(g, build_beta(g, r)).is_zero());
  EXPECT_FALSE(jacobi_residual(build_bracket(g, r, InvariantTheta::one(4))).is_zero());
}

TEST(Bracket, Sl2QuadraticJacobiVanishesForEverySkewR) {
  // Every skew r on sl2 gives a Poisson quadratic part, including e ^ f
  // which violates the CYBE: the kernel map has a one-dimensional kernel.
  std::mt19937_64 rng(34);
  const LieAlgebra sl2 = builtin_algebra("sl2");
  for (int k = 0; k < 5; ++k) {
    const RMatrix r = testing::random_skew_r(rng, 3);
    EXPECT_TRUE(beta_jacobi_residual(sl2, build_beta(sl2, r)).is_zero());
    EXPECT_TRUE(jacobi_residual(build_bracket(sl2, r, InvariantTheta::one(3))).is_zero());
  }
}

TEST(Bracket, RejectsNonInvariantTheta) {
  const LieAlgebra aff1 = builtin_algebra("aff1");
  EXPECT_EQ(kind_of([&] { InvariantTheta::create(aff1, Polynomial::variable(2, 0)); }), ErrorKind::ThetaNotInvariant);
  EXPECT_EQ(kind_of([&] { InvariantTheta::create(aff1, Polynomial::constant(3, 1)); }), ErrorKind::DimensionMismatch);
  // Validated against abelian:2, rejected when used with aff1.
  const InvariantTheta loose = InvariantTheta::create(builtin_algebra("abelian:2"), Polynomial::variable(2, 0));
  EXPECT_EQ(kind_of([&] { build_bracket(aff1, RMatrix::zero(2), loose); }), ErrorKind::ThetaNotInvariant);
}

TEST(Theta, TraceAndCasimirAreInvariant) {
  for (std::size_t n = 1; n <= 3; ++n) {
    EXPECT_TRUE(theta_invariance_residual(gl_structure_constants(n), trace_polynomial(n)).is_zero());
  }
  EXPECT_TRUE(theta_invariance_residual(builtin_algebra("sl2"), sl2_casimir()).is_zero());
  Polynomial wrong = Polynomial::variable(3, 0) * Polynomial::variable(3, 0);
  wrong.add_product(Polynomial::variable(3, 1), Polynomial::variable(3, 2), Scalar(2));
  EXPECT_FALSE(theta_invariance_residual(builtin_algebra("sl2"), wrong).is_zero());
}

TEST(BetaIdentity, HoldsForEverySkewR) {
  std::mt19937_64 rng(35);
  for (const auto& name : kSmall) {
    const LieAlgebra g = builtin_algebra(name);
    for (int k = 0; k < 3; ++k) {
      const RMatrix r = testing::random_skew_r(rng, g.dim());
      EXPECT_TRUE(beta_identity_residual(g, build_beta(g, r), coboundary_cocycle(g, r)).is_zero()) << name;
    }
  }
}

TEST(FallsShort, GeneralBetaLeavesExactlyTheExtraTerm) {
  std::mt19937_64 rng(36);
  for (const auto& name : kSmall) {
    const LieAlgebra g = builtin_algebra(name);
    for (int k = 0; k < 3; ++k) {
      const RMatrix r = testing::random_skew_r(rng, g.dim());
      const CocycleAlpha alpha = coboundary_cocycle(g, r);
      const QuadraticBeta general = build_beta_general(g, alpha, kFallsShortScalar);
      EXPECT_EQ(beta_identity_residual(g, general, alpha), falls_short_term(g, alpha, kFallsShortScalar)) << name;
      EXPECT_EQ(general, build_beta_two_half(g, r)) << name;
    }
  }
}

TEST(FallsShort, OppositeScalarDoesNotBalance) {
  std::mt19937_64 rng(37);
  const LieAlgebra sl2 = builtin_algebra("sl2");
  const RMatrix r = testing::random_cybe_r(rng, "sl2");
  const CocycleAlpha alpha = coboundary_cocycle(sl2, r);
  const Scalar a = -kFallsShortScalar;
  EXPECT_NE(beta_identity_residual(sl2, build_beta_general(sl2, alpha, a), alpha), falls_short_term(sl2, alpha, a));
}

TEST(FallsShort, TwoHalfTensorMissesTheIdentity) {
  std::mt19937_64 rng(38);
  const LieAlgebra sl2 = builtin_algebra("sl2");
  const RMatrix r = testing::random_cybe_r(rng, "sl2");
  EXPECT_FALSE(beta_identity_residual(sl2, build_beta_two_half(sl2, r), coboundary_cocycle(sl2, r)).is_zero());
}

TEST(Bridge, BetaJacobiIsAQuarterOfTheCybeForm) {
  std::mt19937_64 rng(39);
  for (const auto& name : kSmall) {
    const LieAlgebra g = builtin_algebra(name);
    const RMatrix r = testing::random_skew_r(rng, g.dim());
    EXPECT_EQ(beta_jacobi_residual(g, build_beta(g, r)), kBetaJacobiToKernelFormRatio * eq22_form(g, r)) << name;
  }
  const LieAlgebra gl3 = builtin_algebra("gl:3");
  const RMatrix r = testing::random_skew_r(rng, 9);
  const Tensor bj = beta_jacobi_residual(gl3, build_beta(gl3, r));
  ASSERT_FALSE(bj.is_zero());
  EXPECT_EQ(proportionality_constant(bj, eq22_form(gl3, r)), kBetaJacobiToKernelFormRatio);
}

TEST(Bridge, ProportionalityConstantEdgeCases) {
  Tensor a(2, 2);
  Tensor b(2, 2);
  EXPECT_EQ(proportionality_constant(a, b), Scalar(0));
  a(0, 1) = 1;
  EXPECT_EQ(proportionality_constant(a, b), std::nullopt);
  b(0, 1) = 2;
  EXPECT_EQ(proportionality_constant(a, b), Scalar(1, 2));
  b(1, 0) = 1;
  EXPECT_EQ(proportionality_constant(a, b), std::nullopt);
  EXPECT_EQ(kind_of([&] { proportionality_constant(a, Tensor(3, 2)); }), ErrorKind::DimensionMismatch);
}

TEST(Pair, LinearAndQuadraticAreCompatible) {
  std::mt19937_64 rng(40);
  for (const auto& name : kSmall) {
    const LieAlgebra g = builtin_algebra(name);
    const RMatrix r = testing::random_cybe_r(rng, name);
    const PoissonTensor lin = linear_bracket(g, InvariantTheta::one(g.dim()));
    const PoissonTensor quad = quadratic_bracket(g, build_beta(g, r));
    EXPECT_TRUE(compatibility_residual(lin, quad).is_zero()) << name;
  }
}

TEST(Pair, SelfCompatibilityIsTwiceJacobi) {
  std::mt19937_64 rng(41);
  const LieAlgebra g = builtin_algebra("gl:2");
  const PoissonTensor omega = build_bracket(g, testing::random_skew_r(rng, 4), InvariantTheta::one(4));
  const PolynomialFamily j = jacobi_residual(omega);
  const PolynomialFamily c = compatibility_residual(omega, omega);
  ASSERT_EQ(j.nonzero.size(), c.nonzero.size());
  for (std::size_t k = 0; k < j.nonzero.size(); ++k) {
    EXPECT_EQ(c.nonzero[k].poly, Scalar(2) * j.nonzero[k].poly);
  }
}

TEST(Pair, DifferentAlgebrasAreRejected) {
  const PoissonTensor a = PoissonTensor::zero(builtin_algebra("aff1"));
  const PoissonTensor b = PoissonTensor::zero(builtin_algebra("abelian:2"));
  EXPECT_EQ(kind_of([&] { compatibility_residual(a, b); }), ErrorKind::AlgebraMismatch);
}

TEST(InfinitesimalEquivariance, HoldsWithCoboundaryAlpha) {
  std::mt19937_64 rng(42);
  for (const auto& name : kSmall) {
    const LieAlgebra g = builtin_algebra(name);
    const RMatrix r = testing::random_skew_r(rng, g.dim());
    const PoissonTensor omega = build_bracket(g, r, InvariantTheta::one(g.dim()));
    EXPECT_TRUE(infinitesimal_equivariance_residual(g, coboundary_cocycle(g, r), omega).is_zero()) << name;
  }
  const LieAlgebra sl2 = builtin_algebra("sl2");
  const RMatrix r = testing::random_cybe_r(rng, "sl2");
  const PoissonTensor omega = build_bracket(sl2, r, InvariantTheta::create(sl2, sl2_casimir()));
  EXPECT_TRUE(infinitesimal_equivariance_residual(sl2, coboundary_cocycle(sl2, r), omega).is_zero());
}

TEST(InfinitesimalEquivariance, DetectsTheWrongCocycle) {
  std::mt19937_64 rng(43);
  const LieAlgebra sl2 = builtin_algebra("sl2");
  const RMatrix r = testing::random_cybe_r(rng, "sl2");
  const PoissonTensor omega = build_bracket(sl2, r, InvariantTheta::one(3));
  const CocycleAlpha doubled(Scalar(2) * coboundary_cocycle(sl2, r).values());
  EXPECT_FALSE(infinitesimal_equivariance_residual(sl2, doubled, omega).is_zero());
}

TEST(PoissonTensor, RejectsNonAntisymmetricComponents) {
  const LieAlgebra aff1 = builtin_algebra("aff1");
  std::vector<Polynomial> c(4, Polynomial(2));
  c[1] = Polynomial::variable(2, 0);
  EXPECT_EQ(kind_of([&] { PoissonTensor::from_components(aff1, c); }), ErrorKind::NotAntisymmetric);
  c[2] = -c[1];
  EXPECT_NO_THROW(PoissonTensor::from_components(aff1, c));
  c[0] = Polynomial::variable(2, 1);
  EXPECT_EQ(kind_of([&] { PoissonTensor::from_components(aff1, c); }), ErrorKind::NotAntisymmetric);
}

}  // namespace
}  // namespace plk
