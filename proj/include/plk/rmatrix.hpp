#pragma once

#include "plk/lie_algebra.hpp"

namespace plk {

/// Skew 2-tensor r^{ij}, stored as values()(i, j).
class RMatrix {
 public:
  /// Throws DimensionMismatch unless rank 2, NotSkew unless r^{ij} = -r^{ji}.
  explicit RMatrix(Tensor values);

  static RMatrix zero(std::size_t dim) { return RMatrix(Tensor(2, dim)); }
  /// x ^ y = x (x) y - y (x) x.
  static RMatrix wedge(const AlgebraVector& x, const AlgebraVector& y);

  std::size_t dim() const noexcept { return values_.dim(); }
  const Tensor& values() const noexcept { return values_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return values_(i, j); }

  RMatrix scaled(const Scalar& factor) const;
  friend RMatrix operator+(const RMatrix& a, const RMatrix& b);
  friend bool operator==(const RMatrix&, const RMatrix&) = default;

 private:
  Tensor values_;
};

/// A linear map alpha: g -> g ^ g with components alpha^{ij}_k, stored as
/// values()(i, j, k).
class CocycleAlpha {
 public:
  /// Throws DimensionMismatch unless rank 3, NotSkewUpper unless
  /// alpha^{ij}_k = -alpha^{ji}_k.
  explicit CocycleAlpha(Tensor values);

  std::size_t dim() const noexcept { return values_.dim(); }
  const Tensor& values() const noexcept { return values_; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return values_(i, j, k); }

  friend bool operator==(const CocycleAlpha&, const CocycleAlpha&) = default;

 private:
  Tensor values_;
};

/// T^{njl} = C^n_{sp} r^{sj} r^{pl} + C^j_{sp} r^{sl} r^{pn} + C^l_{sp} r^{sn} r^{pj}.
/// Zero exactly when r solves the classical Yang-Baxter equation.
Tensor cybe_residual(const LieAlgebra& algebra, const RMatrix& r);

/// (delta r)^{ij}_n = C^i_{ns} r^{sj} + C^j_{ns} r^{is}.
CocycleAlpha coboundary_cocycle(const LieAlgebra& algebra, const RMatrix& r);

/// residual(k, l, i, j) = alpha^{kl}_s C^s_{ij}
///   - (alpha^{ml}_j C^k_{im} + alpha^{km}_j C^l_{im} - alpha^{ml}_i C^k_{jm} - alpha^{km}_i C^l_{jm}).
Tensor check_cocycle(const LieAlgebra& algebra, const CocycleAlpha& alpha);

}  // namespace plk
