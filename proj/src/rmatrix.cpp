#include "plk/rmatrix.hpp"

#include "plk/error.hpp"

namespace plk {

namespace {

void require_dim(const LieAlgebra& algebra, std::size_t dim, const char* what) {
  if (dim != algebra.dim()) {
    raise(ErrorKind::DimensionMismatch, std::string(what) + " has dimension " + std::to_string(dim) +
                                            ", algebra has " + std::to_string(algebra.dim()));
  }
}

}  // namespace

RMatrix::RMatrix(Tensor values) : values_(std::move(values)) {
  if (values_.rank() != 2) raise(ErrorKind::DimensionMismatch, "r-matrix must be a rank-2 tensor");
  const std::size_t n = values_.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (values_(i, j) != -values_(j, i)) {
        raise(ErrorKind::NotSkew, "r^{" + std::to_string(i + 1) + std::to_string(j + 1) + "} != -r^{" +
                                      std::to_string(j + 1) + std::to_string(i + 1) + "}");
      }
    }
}

RMatrix RMatrix::wedge(const AlgebraVector& x, const AlgebraVector& y) {
  if (x.size() != y.size()) raise(ErrorKind::DimensionMismatch, "wedge of vectors of different length");
  Tensor t(2, x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) t(i, j) = x.coords[i] * y.coords[j] - x.coords[j] * y.coords[i];
  return RMatrix(std::move(t));
}

RMatrix RMatrix::scaled(const Scalar& factor) const { return RMatrix(factor * values_); }

RMatrix operator+(const RMatrix& a, const RMatrix& b) { return RMatrix(a.values_ + b.values_); }

CocycleAlpha::CocycleAlpha(Tensor values) : values_(std::move(values)) {
  if (values_.rank() != 3) raise(ErrorKind::DimensionMismatch, "cocycle must be a rank-3 tensor");
  const std::size_t n = values_.dim();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        if (values_(i, j, k) != -values_(j, i, k)) {
          raise(ErrorKind::NotSkewUpper, "alpha^{" + std::to_string(i + 1) + std::to_string(j + 1) + "}_" +
                                             std::to_string(k + 1) + " is not skew in its upper indices");
        }
      }
}

Tensor cybe_residual(const LieAlgebra& algebra, const RMatrix& r) {
  require_dim(algebra, r.dim(), "r-matrix");
  const std::size_t n = algebra.dim();
  Tensor t(3, n);
  for (const auto& e : algebra.nonzeros()) {
    const std::size_t s = e.left;
    const std::size_t p = e.right;
    for (std::size_t a = 0; a < n; ++a) {
      if (is_zero(r(s, a))) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (is_zero(r(p, b))) continue;
        const Scalar term = e.value * r(s, a) * r(p, b);
        // C^n_{sp} r^{sj} r^{pl}:  (n, j, l) = (upper, a, b)
        t(e.upper, a, b) += term;
        // C^j_{sp} r^{sl} r^{pn}:  (n, j, l) = (b, upper, a)
        t(b, e.upper, a) += term;
        // C^l_{sp} r^{sn} r^{pj}:  (n, j, l) = (a, b, upper)
        t(a, b, e.upper) += term;
      }
    }
  }
  return t;
}

CocycleAlpha coboundary_cocycle(const LieAlgebra& algebra, const RMatrix& r) {
  require_dim(algebra, r.dim(), "r-matrix");
  const std::size_t n = algebra.dim();
  Tensor alpha(3, n);
  for (const auto& e : algebra.nonzeros()) {
    // e = C^u_{ns}
    const std::size_t u = e.upper;
    const std::size_t idx = e.left;
    const std::size_t s = e.right;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(r(s, j))) continue;
      const Scalar term = e.value * r(s, j);
      alpha(u, j, idx) += term;  // C^i_{ns} r^{sj}, i = u
      alpha(j, u, idx) -= term;  // C^j_{ns} r^{is} with j = u, i = j: r^{js} = -r^{sj}
    }
  }
  return CocycleAlpha(std::move(alpha));
}

Tensor check_cocycle(const LieAlgebra& algebra, const CocycleAlpha& alpha) {
  require_dim(algebra, alpha.dim(), "cocycle");
  const std::size_t n = algebra.dim();
  Tensor residual(4, n);
  // alpha^{kl}_s C^s_{ij}
  for (const auto& e : algebra.nonzeros()) {
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        const Scalar& a = alpha(k, l, e.upper);
        if (!is_zero(a)) residual(k, l, e.left, e.right) += a * e.value;
      }
  }
  // Right-hand side; e = C^x_{ym} with x the free upper index.
  for (const auto& e : algebra.nonzeros()) {
    const std::size_t x = e.upper;
    const std::size_t y = e.left;
    const std::size_t m = e.right;
    for (std::size_t other = 0; other < n; ++other)
      for (std::size_t z = 0; z < n; ++z) {
        // alpha^{ml}_j C^k_{im}: k = x, i = y, l = other, j = z
        const Scalar& a1 = alpha(m, other, z);
        if (!is_zero(a1)) residual(x, other, y, z) -= a1 * e.value;
        // alpha^{km}_j C^l_{im}: l = x, i = y, k = other, j = z
        const Scalar& a2 = alpha(other, m, z);
        if (!is_zero(a2)) residual(other, x, y, z) -= a2 * e.value;
        // - alpha^{ml}_i C^k_{jm}: k = x, j = y, l = other, i = z
        if (!is_zero(a1)) residual(x, other, z, y) += a1 * e.value;
        // - alpha^{km}_i C^l_{jm}: l = x, j = y, k = other, i = z
        if (!is_zero(a2)) residual(other, x, z, y) += a2 * e.value;
      }
  }
  return residual;
}

}  // namespace plk
