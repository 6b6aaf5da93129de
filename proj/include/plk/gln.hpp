#pragma once

#include <cstddef>

#include "plk/lie_algebra.hpp"
#include "plk/poisson.hpp"
#include "plk/rmatrix.hpp"

namespace plk {

/// Position (row, column) of a gl(n) coordinate; both 0-based. The flat
/// index is row * n + col, matching gl_flat_index.
struct GlIndex {
  std::size_t row = 0;
  std::size_t col = 0;

  std::size_t flat(std::size_t n) const { return gl_flat_index(n, row, col); }
  /// Throws IndexOutOfRange unless k < n * n.
  static GlIndex from_flat(std::size_t n, std::size_t k);
  friend bool operator==(const GlIndex&, const GlIndex&) = default;
};

/// Doubled-index r-matrix r^{ab}_{ij} on gl(n), stored as values()(a, b, i, j).
class GlRMatrix {
 public:
  /// Throws DimensionMismatch unless rank 4, NotSkewDoubled unless
  /// r^{ab}_{ij} = -r^{ba}_{ji}.
  explicit GlRMatrix(Tensor values);
  static GlRMatrix zero(std::size_t n) { return GlRMatrix(Tensor(4, n)); }

  std::size_t n() const noexcept { return values_.dim(); }
  const Tensor& values() const noexcept { return values_; }
  const Scalar& operator()(std::size_t a, std::size_t b, std::size_t i, std::size_t j) const {
    return values_(a, b, i, j);
  }
  friend bool operator==(const GlRMatrix&, const GlRMatrix&) = default;

 private:
  Tensor values_;
};

/// R^{(a,i),(b,j)} = r^{ba}_{ji}. With the coordinate eta^j_b read as
/// eta_{(b,j)}, this is the ordering under which the doubled-index bracket
/// coincides with build_bracket.
RMatrix flatten(const GlRMatrix& r);
/// Inverse of flatten. Throws DimensionMismatch unless r.dim() is a square.
GlRMatrix unflatten(const RMatrix& r);

/// C^{(a,i)}_{(b,j)(c,k)} = d_ab d_jc d_ki - d_ac d_kb d_ji, written out
/// index by index.
Tensor gl_structure_doubled(std::size_t n);

/// eta^1_1 + ... + eta^n_n.
Polynomial trace_polynomial(std::size_t n);

/// {eta^j_b, eta^k_c} = (d_jc eta^k_b - d_kb eta^j_c) Theta
///   + r^{lw}_{bc} eta^k_w eta^j_l + r^{jk}_{pm} eta^p_b eta^m_c
///   - r^{lk}_{bm} eta^m_c eta^j_l - r^{jw}_{pc} eta^k_w eta^p_b,
/// assembled term by term. Throws ThetaNotInvariant, DimensionMismatch.
PoissonTensor gl_bracket_doubled(std::size_t n, const GlRMatrix& r, const InvariantTheta& theta);

/// Largest |coefficient| of gl_bracket_doubled - build_bracket(gl(n), flatten(r), theta).
/// Throws SizeGuardExceeded for n > max_n.
Scalar cross_check(std::size_t n, const GlRMatrix& r, const InvariantTheta& theta, std::size_t max_n = 3);

}  // namespace plk
