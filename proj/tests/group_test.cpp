#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "generators.hpp"
#include "plk/error.hpp"
#include "plk/group.hpp"

namespace plk {
namespace {

const std::vector<std::string> kCatalog = {"abelian:3", "aff1", "heisenberg3", "sl2", "gl:2", "gl:3"};

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

RealMatrix taylor_exp(const RealMatrix& x) {
  RealMatrix total = RealMatrix::Identity(x.rows(), x.cols());
  RealMatrix term = total;
  for (int k = 1; k < 60; ++k) {
    term = term * x / k;
    total += term;
  }
  return total;
}

RMatrix triangular_gl2_r(std::mt19937_64& rng) {
  // c E11 ^ E12: supported on a two-dimensional subalgebra, so the CYBE holds.
  Tensor t(2, 4);
  t(0, 1) = testing::random_nonzero_rational(rng);
  t(1, 0) = -t(0, 1);
  return RMatrix(t);
}

TEST(MatrixModel, DefaultsCloseUnderCommutators) {
  for (const auto& name : kCatalog) EXPECT_NO_THROW(default_matrix_model(name)) << name;
}

TEST(MatrixModel, RejectsBadBases) {
  std::vector<RealMatrix> basis = default_matrix_basis("aff1");
  std::swap(basis[0], basis[1]);
  EXPECT_EQ(kind_of([&] { MatrixGroupModel(builtin_algebra("aff1"), basis); }), ErrorKind::ClosureViolated);
  basis[0] = basis[1];
  EXPECT_EQ(kind_of([&] { MatrixGroupModel(builtin_algebra("aff1"), basis); }), ErrorKind::BasisDegenerate);
  EXPECT_EQ(kind_of([&] { MatrixGroupModel(builtin_algebra("sl2"), default_matrix_basis("aff1")); }),
            ErrorKind::DimensionMismatch);
}

TEST(Exp, TrivialInputsGiveTheIdentity) {
  const MatrixGroupModel m = default_matrix_model("gl:2");
  const RealVector xi = RealVector::Constant(4, 0.3);
  EXPECT_TRUE(exp_element(m, RealVector::Zero(4)).matrix().isIdentity(0));
  EXPECT_TRUE(exp_element(m, xi, 0.0).matrix().isIdentity(0));
}

TEST(Exp, MatchesSeriesOracle) {
  const MatrixGroupModel aff1 = default_matrix_model("aff1");
  const RealVector e1 = RealVector::Unit(2, 0);
  const RealMatrix y = exp_element(aff1, e1).matrix();
  EXPECT_NEAR(y(0, 0), std::exp(1.0), 1e-12);
  EXPECT_LE((y - taylor_exp(aff1.element_of(e1))).cwiseAbs().maxCoeff(), 1e-12);

  std::mt19937_64 rng(61);
  for (const auto& name : kCatalog) {
    const MatrixGroupModel m = default_matrix_model(name);
    const RealVector xi = sample_unit_ball(rng, m.dim());
    const RealMatrix expected = taylor_exp(m.element_of(xi));
    EXPECT_LE((exp_element(m, xi).matrix() - expected).cwiseAbs().maxCoeff(), 1e-12) << name;
  }
}

TEST(Exp, RejectsNonFinite) {
  const MatrixGroupModel m = default_matrix_model("aff1");
  RealVector xi(2);
  xi << NAN, 0.0;
  EXPECT_EQ(kind_of([&] { exp_element(m, xi); }), ErrorKind::NonFinite);
  EXPECT_EQ(kind_of([&] { exp_element(m, RealVector::Zero(2), INFINITY); }), ErrorKind::NonFinite);
}

TEST(GroupElement, NearSingularIsRejected) {
  RealMatrix y = RealMatrix::Identity(2, 2);
  y(1, 1) = 1e-13;
  EXPECT_EQ(kind_of([&] { GroupElement g(y); }), ErrorKind::SingularElement);
}

TEST(Adjoint, IdentityAndAbelianCases) {
  const MatrixGroupModel gl2 = default_matrix_model("gl:2");
  EXPECT_TRUE(adjoint_matrix(gl2, GroupElement::identity(2)).isIdentity(1e-15));
  EXPECT_LE(ad_invariance_residual(gl2, GroupElement::identity(2)), 1e-14);
  const MatrixGroupModel ab = default_matrix_model("abelian:3");
  std::mt19937_64 rng(62);
  EXPECT_EQ(ad_invariance_residual(ab, exp_element(ab, sample_unit_ball(rng, 3))), 0.0);
}

TEST(Adjoint, IdentitiesHoldOnEveryModel) {
  std::mt19937_64 rng(63);
  for (const auto& name : kCatalog) {
    const MatrixGroupModel m = default_matrix_model(name);
    for (int k = 0; k < 20; ++k) {
      const GroupElement x = exp_element(m, sample_unit_ball(rng, m.dim()));
      const GroupElement y = exp_element(m, sample_unit_ball(rng, m.dim()));
      EXPECT_LE(ad_multiplicativity_residual(m, x, y), 1e-9) << name;
      EXPECT_LE(ad_inverse_residual(m, y), 1e-9) << name;
      EXPECT_LE(ad_invariance_residual(m, y), 1e-9) << name;
      EXPECT_LE(ad_derivative_residual(m, sample_unit_ball(rng, m.dim())), 1e-7) << name;
      EXPECT_LE(group_law_sanity(m, x), 1e-11) << name;
    }
  }
}

TEST(Sigma, VanishesAtIdentityAndForZeroR) {
  std::mt19937_64 rng(64);
  const MatrixGroupModel m = default_matrix_model("gl:2");
  const RMatrix r = testing::random_skew_r(rng, 4);
  EXPECT_LE(sigma_tensor(m, r, GroupElement::identity(2)).values().cwiseAbs().maxCoeff(), 1e-15);
  const GroupElement y = exp_element(m, sample_unit_ball(rng, 4));
  EXPECT_EQ(sigma_tensor(m, RMatrix::zero(4), y).values().cwiseAbs().maxCoeff(), 0.0);
}

TEST(Sigma, Aff1Example) {
  const MatrixGroupModel aff1 = default_matrix_model("aff1");
  Tensor t(2, 2);
  t(0, 1) = 1;
  t(1, 0) = -1;
  const RMatrix r(t);
  const GroupElement y = exp_element(aff1, RealVector::Unit(2, 0));
  const RealMatrix s = sigma_tensor(aff1, r, y).values();
  // Ad_{exp e1} fixes e1 and scales e2 by e, so sigma^{12} = e - 1.
  EXPECT_NEAR(s(0, 1), std::exp(1.0) - 1.0, 1e-12);
  EXPECT_LE((s + s.transpose()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE(sigma_cocycle_residual(aff1, r, y, exp_element(aff1, RealVector::Unit(2, 1))), 1e-8);
}

TEST(Sigma, CocycleHoldsOnlyForMinusR) {
  std::mt19937_64 rng(65);
  const MatrixGroupModel m = default_matrix_model("gl:2");
  const RMatrix r = triangular_gl2_r(rng);
  int broken = 0;
  for (int k = 0; k < 100; ++k) {
    const GroupElement x = exp_element(m, sample_unit_ball(rng, 4));
    const GroupElement y = exp_element(m, sample_unit_ball(rng, 4));
    EXPECT_LE(sigma_cocycle_residual(m, r, x, y), 1e-8);
    if (sigma_cocycle_residual(m, r, x, y, r) >= 1e-3) ++broken;
  }
  EXPECT_GE(broken, 95);
  const GroupElement e = GroupElement::identity(2);
  const GroupElement y = exp_element(m, sample_unit_ball(rng, 4));
  EXPECT_LE(sigma_cocycle_residual(m, r, e, y), 1e-14);
  EXPECT_LE(sigma_cocycle_residual(m, r, y, e), 1e-14);
}

TEST(Sigma, DerivativeMatchesTheCoboundary) {
  std::mt19937_64 rng(66);
  for (const auto& name : kCatalog) {
    const MatrixGroupModel m = default_matrix_model(name);
    const RMatrix r = testing::random_skew_r(rng, m.dim());
    for (std::size_t k = 0; k < m.dim(); ++k) {
      EXPECT_LE(sigma_pde_residual(m, r, GroupElement::identity(m.ambient()), k), 1e-6) << name;
      EXPECT_LE(sigma_pde_residual(m, r, exp_element(m, sample_unit_ball(rng, m.dim())), k), 1e-6) << name;
    }
    EXPECT_LE(sigma_pde_residual(m, RMatrix::zero(m.dim()), GroupElement::identity(m.ambient()), 0), 1e-12);
  }
  const MatrixGroupModel aff1 = default_matrix_model("aff1");
  Tensor t(2, 2);
  t(0, 1) = 1;
  t(1, 0) = -1;
  EXPECT_LE(sigma_pde_residual(aff1, RMatrix(t), exp_element(aff1, RealVector::Unit(2, 1)), 0), 1e-6);
  EXPECT_EQ(kind_of([&] { sigma_pde_residual(aff1, RMatrix(t), GroupElement::identity(2), 2); }),
            ErrorKind::IndexOutOfRange);
}

TEST(CoadjointEquivariance, TrivialCases) {
  std::mt19937_64 rng(67);
  const MatrixGroupModel m = default_matrix_model("gl:2");
  const RMatrix r = triangular_gl2_r(rng);
  const InvariantTheta one = InvariantTheta::one(4);
  EXPECT_LE(coadjoint_equivariance_residual(m, r, one, GroupElement::identity(2), sample_unit_ball(rng, 4)), 1e-14);
  EXPECT_LE(coadjoint_equivariance_residual(m, r, one, exp_element(m, sample_unit_ball(rng, 4)), RealVector::Zero(4)),
            1e-14);
}

TEST(CoadjointEquivariance, HoldsForCybeSolutions) {
  std::mt19937_64 rng(68);
  for (const auto& name : kCatalog) {
    const MatrixGroupModel m = default_matrix_model(name);
    const RMatrix r = testing::random_cybe_r(rng, name);
    const PoissonTensor omega = build_bracket(m.algebra(), r, InvariantTheta::one(m.dim()));
    for (int k = 0; k < 10; ++k) {
      const GroupElement y = exp_element(m, sample_unit_ball(rng, m.dim()));
      EXPECT_LE(coadjoint_equivariance_residual(m, omega, r, y, sample_unit_ball(rng, m.dim())), 1e-8) << name;
    }
  }
}

TEST(CoadjointEquivariance, ScalesAtMostQuadratically) {
  std::mt19937_64 rng(69);
  const MatrixGroupModel m = default_matrix_model("gl:2");
  const RMatrix r = triangular_gl2_r(rng);
  const InvariantTheta one = InvariantTheta::one(4);
  for (int k = 0; k < 10; ++k) {
    const GroupElement y = exp_element(m, sample_unit_ball(rng, 4));
    const RealVector eta = sample_unit_ball(rng, 4);
    const double base = coadjoint_equivariance_residual(m, r, one, y, eta);
    for (double c : {2.0, 4.0}) {
      EXPECT_LE(coadjoint_equivariance_residual(m, r, one, y, c * eta), c * c * base * (1 + 1e-6) + 1e-13);
    }
  }
}

TEST(CoadjointEquivariance, RefusesNonCybeR) {
  const MatrixGroupModel sl2 = default_matrix_model("sl2");
  Tensor t(2, 3);
  t(1, 2) = 1;
  t(2, 1) = -1;
  EXPECT_EQ(kind_of([&] {
              coadjoint_equivariance_residual(sl2, RMatrix(t), InvariantTheta::one(3), GroupElement::identity(2),
                                              RealVector::Zero(3));
            }),
            ErrorKind::CYBEViolated);
}

TEST(Sampling, StaysInTheUnitBallAndIsReproducible) {
  std::mt19937_64 a(70);
  std::mt19937_64 b(70);
  for (int k = 0; k < 100; ++k) {
    const RealVector v = sample_unit_ball(a, 5);
    EXPECT_LE(v.norm(), 1.0 + 1e-15);
    EXPECT_EQ(v, sample_unit_ball(b, 5));
  }
}

}  // namespace
}  // namespace plk
