#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "plk/lie_algebra.hpp"
#include "plk/polynomial.hpp"
#include "plk/rmatrix.hpp"

namespace plk {

/// Quadratic coefficients beta^{kl}_{ij}, stored as values()(k, l, i, j),
/// with the contract beta^{qr}_{ij} = -beta^{rq}_{ji}.
class QuadraticBeta {
 public:
  /// Throws DimensionMismatch unless rank 4, NotSkew if the contract fails.
  explicit QuadraticBeta(Tensor values);

  std::size_t dim() const noexcept { return values_.dim(); }
  const Tensor& values() const noexcept { return values_; }
  const Scalar& operator()(std::size_t k, std::size_t l, std::size_t i, std::size_t j) const {
    return values_(k, l, i, j);
  }
  friend bool operator==(const QuadraticBeta&, const QuadraticBeta&) = default;

 private:
  Tensor values_;
};

/// Residual of C^l_{sn} C^k_{ij} eta_l eta_k dTheta/deta_s, indexed (n, i, j).
PolynomialFamily theta_invariance_residual(const LieAlgebra& algebra, const Polynomial& theta);

/// A polynomial Theta(eta) whose invariance residual vanishes identically.
class InvariantTheta {
 public:
  /// Throws DimensionMismatch if the variable count differs from dim,
  /// ThetaNotInvariant if the invariance residual is nonzero.
  static InvariantTheta create(const LieAlgebra& algebra, Polynomial poly);
  static InvariantTheta one(std::size_t dim) { return InvariantTheta(Polynomial::constant(dim, 1)); }

  const Polynomial& poly() const noexcept { return poly_; }
  std::size_t nvars() const noexcept { return poly_.nvars(); }

 private:
  explicit InvariantTheta(Polynomial poly) : poly_(std::move(poly)) {}
  Polynomial poly_;
};

/// A bivector on the dual space with polynomial components omega_{ij}(eta).
class PoissonTensor {
 public:
  /// `components` is row-major n x n. Throws DimensionMismatch on shape or
  /// variable-count errors, NotAntisymmetric unless omega_{ij} = -omega_{ji}.
  static PoissonTensor from_components(LieAlgebra algebra, std::vector<Polynomial> components);
  static PoissonTensor zero(LieAlgebra algebra);

  const LieAlgebra& algebra() const noexcept { return algebra_; }
  std::size_t dim() const noexcept { return algebra_.dim(); }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return components_[i * dim() + j]; }
  const std::vector<Polynomial>& components() const noexcept { return components_; }

  friend bool operator==(const PoissonTensor& a, const PoissonTensor& b) {
    return a.algebra_ == b.algebra_ && a.components_ == b.components_;
  }

 private:
  PoissonTensor(LieAlgebra algebra, std::vector<Polynomial> components)
      : algebra_(std::move(algebra)), components_(std::move(components)) {}

  LieAlgebra algebra_;
  std::vector<Polynomial> components_;
};

/// beta^{kl}_{ij} = 1/2 (C^k_{ip} C^l_{js} + C^l_{ip} C^k_{js}) r^{sp}.
QuadraticBeta build_beta(const LieAlgebra& algebra, const RMatrix& r);

/// Unsymmetrized coefficients C^k_{ip} C^l_{js} r^{sp} of the bracket's
/// quadratic part, indexed (k, l, i, j).
Tensor bracket_quadratic_coefficients(const LieAlgebra& algebra, const RMatrix& r);

/// beta^{kl}_{ij} = a [alpha^{ks}_i C^l_{sj} - alpha^{ks}_j C^l_{si} + alpha^{ls}_i C^k_{sj} - alpha^{ls}_j C^k_{si}].
QuadraticBeta build_beta_general(const LieAlgebra& algebra, const CocycleAlpha& alpha, const Scalar& a);

/// The two-half tensor
///   1/2 (C^k_{ip} C^l_{js} + C^l_{ip} C^k_{js}) r^{sp} + 1/4 C^s_{ij} [C^l_{sm} r^{km} + C^k_{sm} r^{lm}],
/// the coboundary specialization of build_beta_general at a = kFallsShortScalar.
QuadraticBeta build_beta_two_half(const LieAlgebra& algebra, const RMatrix& r);

/// -a C^m_{ij} [alpha^{qs}_n C^r_{ms} + alpha^{rs}_n C^q_{ms}], indexed (q, r, i, j, n).
Tensor falls_short_term(const LieAlgebra& algebra, const CocycleAlpha& alpha, const Scalar& a);

/// The scalar for which
///   beta_identity_residual(build_beta_general(alpha, a), alpha) == falls_short_term(alpha, a)
/// holds exactly for coboundaries. Established by exact computation on the
/// catalog; the opposite sign does not balance.
inline const Scalar kFallsShortScalar{1, 4};

/// C^q_{sn} beta^{sr}_{ij} + C^r_{sn} beta^{qs}_{ij} - C^s_{in} beta^{qr}_{sj} - C^s_{jn} beta^{qr}_{is}
///   - 1/2 (C^q_{is} C^r_{jl} + C^r_{is} C^q_{jl}) alpha^{sl}_n, indexed (q, r, i, j, n).
Tensor beta_identity_residual(const LieAlgebra& algebra, const QuadraticBeta& beta, const CocycleAlpha& alpha);

/// omega_{ij}(eta) = C^s_{ij} eta_s Theta(eta) + C^k_{ip} C^l_{js} r^{sp} eta_k eta_l.
/// Throws ThetaNotInvariant, NotSkew, DimensionMismatch.
PoissonTensor build_bracket(const LieAlgebra& algebra, const RMatrix& r, const InvariantTheta& theta);

/// C^s_{ij} eta_s Theta(eta) alone.
PoissonTensor linear_bracket(const LieAlgebra& algebra, const InvariantTheta& theta);

/// beta^{kl}_{ij} eta_k eta_l alone.
PoissonTensor quadratic_bracket(const LieAlgebra& algebra, const QuadraticBeta& beta);

/// Jacobiator omega_{ij} d_i omega_{kl} + omega_{ik} d_i omega_{lj} + omega_{il} d_i omega_{jk}
/// (d_i = d/d eta_i, summed over i). The expression is totally
/// antisymmetric in (j, k, l) for antisymmetric omega, so the family holds
/// the strictly increasing triples j < k < l.
PolynomialFamily jacobi_residual(const PoissonTensor& omega);

/// Symmetric mixed Jacobiator of two bivectors over the same algebra,
/// indexed like jacobi_residual. Throws AlgebraMismatch.
PolynomialFamily compatibility_residual(const PoissonTensor& omega1, const PoissonTensor& omega2);

/// Sum over cyclic (q, r, m) and cyclic (i, j, k) of beta^{qr}_{si} beta^{sm}_{jk},
/// indexed (q, r, m, i, j, k).
Tensor beta_jacobi_residual(const LieAlgebra& algebra, const QuadraticBeta& beta);

/// [C^q_{js} (C^m_{ku} C^r_{iw} + C^r_{ku} C^m_{iw}) + cyclic(q, m, r)] T^{suw}
/// with T = cybe_residual(r), indexed (q, m, r, i, j, k).
Tensor eq22_form(const LieAlgebra& algebra, const RMatrix& r);

/// beta_jacobi_residual(build_beta(r)) = kBetaJacobiToKernelFormRatio * eq22_form(r).
/// Calibrated on gl(3), the smallest catalog algebra where both are nonzero.
inline const Scalar kBetaJacobiToKernelFormRatio{1, 4};

/// The c with lhs = c * rhs, if one exists. Both zero gives c = 0.
std::optional<Scalar> proportionality_constant(const Tensor& lhs, const Tensor& rhs);

enum class EliminationOrder {
  RowsForward,           // pivot columns left to right on the matrix itself
  TransposedReversed,    // eliminate on the transpose, columns right to left
};

/// Exact rank by fraction-free (Bareiss) elimination after clearing
/// denominators row by row.
std::size_t exact_rank(const RationalMatrix& matrix, EliminationOrder order = EliminationOrder::RowsForward);

struct KernelMap {
  /// Rows (q, m, r, i, j, k), columns (s, u, w), both row-major flattened.
  RationalMatrix matrix;
  std::size_t rank = 0;
  std::size_t kernel_dimension = 0;
};

/// The map g(x)3 -> g(x)3 (x) g*(x)3 sending T^{suw} to eq22_form. Throws
/// SizeGuardExceeded when dim > max_dim.
KernelMap kernel_map_matrix(const LieAlgebra& algebra, std::size_t max_dim = 4,
                            EliminationOrder order = EliminationOrder::RowsForward);

/// C^l_{sn} eta_l d omega_{ij}/d eta_s - C^k_{in} omega_{kj} - C^l_{jn} omega_{il}
///   - C^s_{ik} C^p_{jl} alpha^{kl}_n eta_s eta_p, indexed (i, j, n).
/// The source-term sign matches beta_identity_residual, so the two agree
/// on purely quadratic omega.
PolynomialFamily infinitesimal_equivariance_residual(const LieAlgebra& algebra, const CocycleAlpha& alpha,
                                                     const PoissonTensor& omega);

}  // namespace plk
