#include "plk/gln.hpp"

#include <string>

#include "plk/error.hpp"

namespace plk {

namespace {

std::size_t square_root(std::size_t dim) {
  std::size_t n = 0;
  while (n * n < dim) ++n;
  if (n * n != dim) raise(ErrorKind::DimensionMismatch, std::to_string(dim) + " is not a square dimension");
  return n;
}

Scalar delta(std::size_t a, std::size_t b) { return a == b ? 1 : 0; }

}  // namespace

GlIndex GlIndex::from_flat(std::size_t n, std::size_t k) {
  if (k >= n * n) raise(ErrorKind::IndexOutOfRange, "gl index " + std::to_string(k) + " out of range");
  return {k / n, k % n};
}

GlRMatrix::GlRMatrix(Tensor values) : values_(std::move(values)) {
  if (values_.rank() != 4) raise(ErrorKind::DimensionMismatch, "doubled-index r-matrix must be rank 4");
  const std::size_t n = values_.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (values_(a, b, i, j) != -values_(b, a, j, i)) {
            raise(ErrorKind::NotSkewDoubled,
                  "r^{ab}_{ij} != -r^{ba}_{ji} at " + values_.describe_entry(std::vector<std::size_t>{a, b, i, j}));
          }
        }
}

RMatrix flatten(const GlRMatrix& r) {
  const std::size_t n = r.n();
  Tensor flat(2, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t j = 0; j < n; ++j) flat(gl_flat_index(n, a, i), gl_flat_index(n, b, j)) = r(b, a, j, i);
  return RMatrix(std::move(flat));
}

GlRMatrix unflatten(const RMatrix& r) {
  const std::size_t n = square_root(r.dim());
  Tensor doubled(4, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t j = 0; j < n; ++j) doubled(b, a, j, i) = r(gl_flat_index(n, a, i), gl_flat_index(n, b, j));
  return GlRMatrix(std::move(doubled));
}

Tensor gl_structure_doubled(std::size_t n) {
  Tensor c(3, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t g = 0; g < n; ++g)
            for (std::size_t k = 0; k < n; ++k) {
              const Scalar value = delta(a, b) * delta(j, g) * delta(k, i) - delta(a, g) * delta(k, b) * delta(j, i);
              if (!is_zero(value)) c(gl_flat_index(n, a, i), gl_flat_index(n, b, j), gl_flat_index(n, g, k)) = value;
            }
  return c;
}

Polynomial trace_polynomial(std::size_t n) {
  Polynomial p(n * n);
  for (std::size_t a = 0; a < n; ++a) p.add_term(Monomial::variable(gl_flat_index(n, a, a)), 1);
  return p;
}

PoissonTensor gl_bracket_doubled(std::size_t n, const GlRMatrix& r, const InvariantTheta& theta) {
  if (r.n() != n) raise(ErrorKind::DimensionMismatch, "r-matrix is for gl(" + std::to_string(r.n()) + ")");
  const LieAlgebra algebra = gl_structure_constants(n);
  const InvariantTheta checked = InvariantTheta::create(algebra, theta.poly());
  const std::size_t dim = n * n;
  // eta^j_b is the coordinate with flat index (b, j).
  auto eta = [n](std::size_t lower, std::size_t upper) { return Monomial::variable(gl_flat_index(n, lower, upper)); };

  std::vector<Polynomial> components(dim * dim, Polynomial(dim));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = 0; k < n; ++k) {
          Polynomial& out = components[gl_flat_index(n, b, j) * dim + gl_flat_index(n, c, k)];
          Polynomial linear(dim);
          if (j == c) linear.add_term(eta(b, k), 1);
          if (k == b) linear.add_term(eta(c, j), -1);
          out.add_product(linear, checked.poly());
          for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
              // r^{lw}_{bc} eta^k_w eta^j_l with l = x, w = y
              out.add_term(eta(y, k) * eta(x, j), r(x, y, b, c));
              // r^{jk}_{pm} eta^p_b eta^m_c with p = x, m = y
              out.add_term(eta(b, x) * eta(c, y), r(j, k, x, y));
              // -r^{lk}_{bm} eta^m_c eta^j_l with l = x, m = y
              out.add_term(eta(c, y) * eta(x, j), -r(x, k, b, y));
              // -r^{jw}_{pc} eta^k_w eta^p_b with w = x, p = y
              out.add_term(eta(x, k) * eta(b, y), -r(j, x, y, c));
            }
        }
  return PoissonTensor::from_components(algebra, std::move(components));
}

Scalar cross_check(std::size_t n, const GlRMatrix& r, const InvariantTheta& theta, std::size_t max_n) {
  if (n > max_n) {
    raise(ErrorKind::SizeGuardExceeded, "cross check for n = " + std::to_string(n) + " exceeds guard " +
                                            std::to_string(max_n));
  }
  const PoissonTensor literal = gl_bracket_doubled(n, r, theta);
  const PoissonTensor generic = build_bracket(gl_structure_constants(n), flatten(r), theta);
  Scalar worst = 0;
  for (std::size_t k = 0; k < literal.components().size(); ++k) {
    const Scalar m = (literal.components()[k] - generic.components()[k]).max_abs_coefficient();
    if (m > worst) worst = m;
  }
  return worst;
}

}  // namespace plk
