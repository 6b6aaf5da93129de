#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "plk/lie_algebra.hpp"
#include "plk/poisson.hpp"
#include "plk/rmatrix.hpp"

namespace plk {

using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Floating tolerances of the group-level checks.
inline constexpr double kClosureTolerance = 1e-12;
inline constexpr double kDeterminantFloor = 1e-12;
inline constexpr double kExpansionTolerance = 1e-10;
inline constexpr double kFiniteDifferenceStep = 1e-5;

/// A basis X_1..X_n of the algebra realized as m x m real matrices with
/// [X_i, X_j] = C^k_{ij} X_k.
class MatrixGroupModel {
 public:
  /// Throws DimensionMismatch on shape errors, BasisDegenerate if the
  /// flattened matrices are dependent, ClosureViolated if a commutator
  /// misses C^k_{ij} X_k by more than kClosureTolerance.
  MatrixGroupModel(LieAlgebra algebra, std::vector<RealMatrix> basis);

  const LieAlgebra& algebra() const noexcept { return algebra_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t ambient() const noexcept { return ambient_; }
  const std::vector<RealMatrix>& basis() const noexcept { return basis_; }
  /// C^k_{ij} as doubles, row (k * n + i), column j.
  double c(std::size_t k, std::size_t i, std::size_t j) const { return structure_[(k * dim() + i) * dim() + j]; }

  /// xi^i X_i.
  RealMatrix element_of(const RealVector& xi) const;
  /// Coordinates of `m` in the basis. Throws ClosureViolated if `m` is not
  /// in the span to within kExpansionTolerance (relative to its size).
  RealVector coordinates(const RealMatrix& m) const;

 private:
  LieAlgebra algebra_;
  std::vector<RealMatrix> basis_;
  std::size_t ambient_ = 0;
  std::vector<double> structure_;
  RealMatrix flattened_;  // m^2 x n
  Eigen::ColPivHouseholderQR<RealMatrix> solver_;
};

/// Catalog matrix models: aff1 = {E11, E12}; heisenberg3 = (E12, E23, E13);
/// sl2 = (diag(1,-1), E12, E21); gl:n = matrix units, row-major;
/// abelian:n = diagonal units. Throws UnknownAlgebra.
std::vector<RealMatrix> default_matrix_basis(std::string_view name);
MatrixGroupModel default_matrix_model(std::string_view name);

/// An invertible m x m matrix together with its inverse.
class GroupElement {
 public:
  /// Throws NonFinite, or SingularElement when |det y| <= kDeterminantFloor.
  explicit GroupElement(RealMatrix y);
  static GroupElement identity(std::size_t m) { return GroupElement(RealMatrix::Identity(m, m)); }

  const RealMatrix& matrix() const noexcept { return y_; }
  const RealMatrix& inverse_matrix() const noexcept { return inverse_; }
  GroupElement inverse() const { return GroupElement(inverse_, y_); }
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return GroupElement(a.y_ * b.y_, b.inverse_ * a.inverse_);
  }

 private:
  GroupElement(RealMatrix y, RealMatrix inverse) : y_(std::move(y)), inverse_(std::move(inverse)) {}
  RealMatrix y_;
  RealMatrix inverse_;
};

/// sigma^{ij}(y), skew within kExpansionTolerance.
class SigmaTensor {
 public:
  /// Throws NotSkew.
  explicit SigmaTensor(RealMatrix values);
  const RealMatrix& values() const noexcept { return values_; }
  double operator()(std::size_t i, std::size_t j) const { return values_(i, j); }

 private:
  RealMatrix values_;
};

/// Componentwise uniform in [-1, 1], scaled back onto the unit ball when
/// the draw lands outside it.
RealVector sample_unit_ball(std::mt19937_64& rng, std::size_t n);

RealMatrix to_real(const Tensor& rank2);

/// exp(t xi^i X_i). Throws NonFinite.
GroupElement exp_element(const MatrixGroupModel& model, const RealVector& xi, double t = 1.0);

/// A^i_j(y), defined by y X_j y^{-1} = A^i_j X_i.
RealMatrix adjoint_matrix(const MatrixGroupModel& model, const GroupElement& y);

/// max |A(xy) - A(x) A(y)|.
double ad_multiplicativity_residual(const MatrixGroupModel& model, const GroupElement& x, const GroupElement& y);

/// max |A(y) A(y^{-1}) - 1|.
double ad_inverse_residual(const MatrixGroupModel& model, const GroupElement& y);

/// Central difference of A(exp(t xi)) at t = 0 with step h.
RealMatrix ad_derivative_at_identity(const MatrixGroupModel& model, const RealVector& xi,
                                     double h = kFiniteDifferenceStep);

/// max |d/dt A(exp(t xi))|_0 - C^i_{sj} xi^s|. The derivative of y X_j y^{-1}
/// is [xi, X_j], so the left factor of C carries xi.
double ad_derivative_residual(const MatrixGroupModel& model, const RealVector& xi, double h = kFiniteDifferenceStep);

/// max |C^i_{jk} - A^i_s(y) C^s_{pq} A^p_j(y^{-1}) A^q_k(y^{-1})|.
double ad_invariance_residual(const MatrixGroupModel& model, const GroupElement& y);

/// sigma(y) = A(y) r A(y)^T + r0, with r0 = -r unless given.
SigmaTensor sigma_tensor(const MatrixGroupModel& model, const RMatrix& r, const GroupElement& y,
                         const std::optional<RMatrix>& r0 = std::nullopt);

/// max |sigma(xy) - sigma(x) - A(x) sigma(y) A(x)^T|.
double sigma_cocycle_residual(const MatrixGroupModel& model, const RMatrix& r, const GroupElement& x,
                              const GroupElement& y, const std::optional<RMatrix>& r0 = std::nullopt);

/// max |d/dt sigma(x exp(t e_k))|_0 - A(x) alpha_k A(x)^T| with alpha = delta r
/// and the derivative taken by central differences.
double sigma_pde_residual(const MatrixGroupModel& model, const RMatrix& r, const GroupElement& x, std::size_t k,
                          double h = kFiniteDifferenceStep);

/// The coadjoint functional equation for omega = build_bracket(r, theta):
///   omega_{ij}(A(y^{-1})^T eta) = A^k_i(y^{-1}) A^l_j(y^{-1}) omega_{kl}(eta)
///     + C^m_{iq} C^n_{jt} A^s_m(y^{-1}) A^p_n(y^{-1}) eta_s eta_p sigma^{qt}(y),
/// returning the max over (i, j) of |lhs - rhs|. Throws CYBEViolated unless
/// r solves the CYBE exactly.
double coadjoint_equivariance_residual(const MatrixGroupModel& model, const RMatrix& r, const InvariantTheta& theta,
                                       const GroupElement& y, const RealVector& eta);

/// Same, reusing a bracket built once by the caller. `omega` must come from
/// build_bracket(model.algebra(), r, theta) with a CYBE r.
double coadjoint_equivariance_residual(const MatrixGroupModel& model, const PoissonTensor& omega, const RMatrix& r,
                                       const GroupElement& y, const RealVector& eta);

/// max of |x x^{-1} - 1| and |x^{-1} x - 1|.
double group_law_sanity(const MatrixGroupModel& model, const GroupElement& x);

}  // namespace plk
