#include "plk/poisson.hpp"

#include <algorithm>

#include "plk/error.hpp"

namespace plk {

namespace {

void require_dim(const LieAlgebra& algebra, std::size_t dim, const char* what) {
  if (dim != algebra.dim()) {
    raise(ErrorKind::DimensionMismatch, std::string(what) + " has dimension " + std::to_string(dim) +
                                            ", algebra has " + std::to_string(algebra.dim()));
  }
}

/// eta-linear form sum_k coeff(k) eta_k.
Polynomial linear_form(std::size_t n, const std::vector<Scalar>& coeffs) {
  Polynomial p(n);
  for (std::size_t k = 0; k < n; ++k) p.add_term(Monomial::variable(k), coeffs[k]);
  return p;
}

/// V[s * n + m] = C^l_{sm} eta_l, the coadjoint vector field components.
std::vector<Polynomial> coadjoint_fields(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  std::vector<Polynomial> fields(n * n, Polynomial(n));
  for (const auto& e : algebra.nonzeros()) {
    fields[e.left * n + e.right].add_term(Monomial::variable(e.upper), e.value);
  }
  return fields;
}

/// D[s][i * n + j] = d omega_{ij} / d eta_s.
std::vector<std::vector<Polynomial>> derivatives(const PoissonTensor& omega) {
  const std::size_t n = omega.dim();
  std::vector<std::vector<Polynomial>> d(n);
  for (std::size_t s = 0; s < n; ++s) {
    d[s].reserve(n * n);
    for (const auto& component : omega.components()) d[s].push_back(component.derivative(s));
  }
  return d;
}

/// sum_i a_{ij} d_i b_{kl} + a_{ik} d_i b_{lj} + a_{il} d_i b_{jk} over j < k < l,
/// optionally plus the same with a and b exchanged.
PolynomialFamily jacobiator(const PoissonTensor& a, const PoissonTensor& b, bool symmetric) {
  const std::size_t n = a.dim();
  const auto da = symmetric ? derivatives(a) : std::vector<std::vector<Polynomial>>{};
  const auto db = derivatives(b);
  PolynomialFamily family{n, 3, {}};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      for (std::size_t l = k + 1; l < n; ++l) {
        Polynomial total(n);
        for (std::size_t i = 0; i < n; ++i) {
          total.add_product(a(i, j), db[i][k * n + l]);
          total.add_product(a(i, k), db[i][l * n + j]);
          total.add_product(a(i, l), db[i][j * n + k]);
          if (symmetric) {
            total.add_product(b(i, j), da[i][k * n + l]);
            total.add_product(b(i, k), da[i][l * n + j]);
            total.add_product(b(i, l), da[i][j * n + k]);
          }
        }
        if (!total.is_zero()) family.nonzero.push_back({{j, k, l}, std::move(total)});
      }
  return family;
}

std::vector<std::vector<std::size_t>> all_permutations_of_first_three(std::size_t rank) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> head{0, 1, 2};
  do {
    std::vector<std::size_t> perm(rank);
    for (std::size_t a = 0; a < rank; ++a) perm[a] = a;
    std::copy(head.begin(), head.end(), perm.begin());
    perms.push_back(std::move(perm));
  } while (std::next_permutation(head.begin(), head.end()));
  return perms;
}

}  // namespace

QuadraticBeta::QuadraticBeta(Tensor values) : values_(std::move(values)) {
  if (values_.rank() != 4) raise(ErrorKind::DimensionMismatch, "beta must be a rank-4 tensor");
  const std::size_t n = values_.dim();
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (values_(q, r, i, j) != -values_(r, q, j, i)) {
            raise(ErrorKind::NotSkew, "beta^{qr}_{ij} != -beta^{rq}_{ji} at " +
                                          values_.describe_entry(std::vector<std::size_t>{q, r, i, j}));
          }
        }
}

PolynomialFamily theta_invariance_residual(const LieAlgebra& algebra, const Polynomial& theta) {
  const std::size_t n = algebra.dim();
  require_dim(algebra, theta.nvars(), "theta");
  const auto fields = coadjoint_fields(algebra);
  std::vector<Polynomial> gradient;
  for (std::size_t s = 0; s < n; ++s) gradient.push_back(theta.derivative(s));

  // G_m = C^l_{sm} eta_l dTheta/deta_s
  std::vector<Polynomial> directional(n, Polynomial(n));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t s = 0; s < n; ++s) directional[m].add_product(fields[s * n + m], gradient[s]);

  PolynomialFamily family{n, 3, {}};
  for (std::size_t m = 0; m < n; ++m) {
    if (directional[m].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Scalar> coeffs(n);
        for (std::size_t k = 0; k < n; ++k) coeffs[k] = algebra.c(k, i, j);
        Polynomial product = linear_form(n, coeffs) * directional[m];
        if (!product.is_zero()) family.nonzero.push_back({{m, i, j}, std::move(product)});
      }
  }
  return family;
}

InvariantTheta InvariantTheta::create(const LieAlgebra& algebra, Polynomial poly) {
  const auto residual = theta_invariance_residual(algebra, poly);
  if (!residual.is_zero()) {
    const auto& first = residual.nonzero.front();
    raise(ErrorKind::ThetaNotInvariant, "invariance residual nonzero at (" + std::to_string(first.index[0] + 1) +
                                            "," + std::to_string(first.index[1] + 1) + "," +
                                            std::to_string(first.index[2] + 1) + "): " + first.poly.to_string());
  }
  return InvariantTheta(std::move(poly));
}

PoissonTensor PoissonTensor::from_components(LieAlgebra algebra, std::vector<Polynomial> components) {
  const std::size_t n = algebra.dim();
  if (components.size() != n * n) raise(ErrorKind::DimensionMismatch, "bivector needs n*n components");
  for (const auto& c : components) {
    if (c.nvars() != n) raise(ErrorKind::DimensionMismatch, "component over the wrong number of variables");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (components[i * n + j] != -components[j * n + i]) {
        raise(ErrorKind::NotAntisymmetric, "omega_{" + std::to_string(i + 1) + std::to_string(j + 1) +
                                               "} != -omega_{" + std::to_string(j + 1) + std::to_string(i + 1) + "}");
      }
    }
  return PoissonTensor(std::move(algebra), std::move(components));
}

PoissonTensor PoissonTensor::zero(LieAlgebra algebra) {
  const std::size_t n = algebra.dim();
  return PoissonTensor(std::move(algebra), std::vector<Polynomial>(n * n, Polynomial(n)));
}

Tensor bracket_quadratic_coefficients(const LieAlgebra& algebra, const RMatrix& r) {
  require_dim(algebra, r.dim(), "r-matrix");
  Tensor q(4, algebra.dim());
  for (const auto& e1 : algebra.nonzeros()) {      // C^k_{ip}
    for (const auto& e2 : algebra.nonzeros()) {    // C^l_{js}
      const Scalar& rsp = r(e2.right, e1.right);
      if (is_zero(rsp)) continue;
      q(e1.upper, e2.upper, e1.left, e2.left) += e1.value * e2.value * rsp;
    }
  }
  return q;
}

QuadraticBeta build_beta(const LieAlgebra& algebra, const RMatrix& r) {
  require_dim(algebra, r.dim(), "r-matrix");
  Tensor beta(4, algebra.dim());
  const Scalar half(1, 2);
  for (const auto& e1 : algebra.nonzeros()) {      // C^k_{ip} (or C^l_{ip})
    for (const auto& e2 : algebra.nonzeros()) {    // C^l_{js} (or C^k_{js})
      const Scalar& rsp = r(e2.right, e1.right);
      if (is_zero(rsp)) continue;
      const Scalar term = half * e1.value * e2.value * rsp;
      beta(e1.upper, e2.upper, e1.left, e2.left) += term;
      beta(e2.upper, e1.upper, e1.left, e2.left) += term;
    }
  }
  return QuadraticBeta(std::move(beta));
}

QuadraticBeta build_beta_general(const LieAlgebra& algebra, const CocycleAlpha& alpha, const Scalar& a) {
  require_dim(algebra, alpha.dim(), "cocycle");
  const std::size_t n = algebra.dim();
  // g(k, l, i, j) = alpha^{ks}_i C^l_{sj} - alpha^{ks}_j C^l_{si}
  Tensor g(4, n);
  for (const auto& e : algebra.nonzeros()) {  // C^l_{s x}
    const std::size_t l = e.upper;
    const std::size_t s = e.left;
    const std::size_t x = e.right;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t y = 0; y < n; ++y) {
        const Scalar& av = alpha(k, s, y);
        if (is_zero(av)) continue;
        const Scalar term = av * e.value;
        g(k, l, y, x) += term;  // alpha^{ks}_i C^l_{sj}: i = y, j = x
        g(k, l, x, y) -= term;  // alpha^{ks}_j C^l_{si}: j = y, i = x
      }
  }
  Tensor beta = g;
  const std::vector<std::size_t> swap_upper{1, 0, 2, 3};
  beta += g.permuted(swap_upper);
  beta *= a;
  return QuadraticBeta(std::move(beta));
}

QuadraticBeta build_beta_two_half(const LieAlgebra& algebra, const RMatrix& r) {
  Tensor beta = build_beta(algebra, r).values();
  const Scalar quarter(1, 4);
  // 1/4 C^s_{ij} [C^l_{sm} r^{km} + C^k_{sm} r^{lm}]
  for (const auto& outer : algebra.nonzeros()) {                   // C^s_{ij}
    for (const auto& inner : algebra.by_left(outer.upper)) {       // C^x_{sm}
      for (std::size_t y = 0; y < algebra.dim(); ++y) {
        const Scalar& rym = r(y, inner.right);
        if (is_zero(rym)) continue;
        const Scalar term = quarter * outer.value * inner.value * rym;
        beta(y, inner.upper, outer.left, outer.right) += term;  // l = x, k = y
        beta(inner.upper, y, outer.left, outer.right) += term;  // k = x, l = y
      }
    }
  }
  return QuadraticBeta(std::move(beta));
}

Tensor falls_short_term(const LieAlgebra& algebra, const CocycleAlpha& alpha, const Scalar& a) {
  require_dim(algebra, alpha.dim(), "cocycle");
  const std::size_t n = algebra.dim();
  // w(q, r, m, n') = alpha^{qs}_{n'} C^r_{ms} + alpha^{rs}_{n'} C^q_{ms}
  Tensor w(4, n);
  for (const auto& e : algebra.nonzeros()) {  // C^x_{m s}
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t idx = 0; idx < n; ++idx) {
        const Scalar& av = alpha(y, e.right, idx);
        if (is_zero(av)) continue;
        const Scalar term = av * e.value;
        w(y, e.upper, e.left, idx) += term;  // q = y, r = x
        w(e.upper, y, e.left, idx) += term;  // r = y, q = x
      }
  }
  Tensor out(5, n);
  const Scalar factor = -a;
  for (const auto& e : algebra.nonzeros()) {  // C^m_{ij}
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t idx = 0; idx < n; ++idx) {
          const Scalar& wv = w(q, r, e.upper, idx);
          if (!is_zero(wv)) out(q, r, e.left, e.right, idx) += factor * e.value * wv;
        }
  }
  return out;
}

Tensor beta_identity_residual(const LieAlgebra& algebra, const QuadraticBeta& beta, const CocycleAlpha& alpha) {
  require_dim(algebra, beta.dim(), "beta");
  require_dim(algebra, alpha.dim(), "cocycle");
  const std::size_t n = algebra.dim();
  Tensor out(5, n);
  for (const auto& e : algebra.nonzeros()) {
    const std::size_t x = e.upper;
    const std::size_t y = e.left;
    const std::size_t z = e.right;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          // + C^q_{sn} beta^{sr}_{ij}: q = x, s = y, n = z, (r, i, j) = (a, b, c)
          if (const Scalar& v = beta(y, a, b, c); !is_zero(v)) out(x, a, b, c, z) += e.value * v;
          // + C^r_{sn} beta^{qs}_{ij}: r = x, s = y, n = z, (q, i, j) = (a, b, c)
          if (const Scalar& v = beta(a, y, b, c); !is_zero(v)) out(a, x, b, c, z) += e.value * v;
          // - C^s_{in} beta^{qr}_{sj}: s = x, i = y, n = z, (q, r, j) = (a, b, c)
          if (const Scalar& v = beta(a, b, x, c); !is_zero(v)) out(a, b, y, c, z) -= e.value * v;
          // - C^s_{jn} beta^{qr}_{is}: s = x, j = y, n = z, (q, r, i) = (a, b, c)
          if (const Scalar& v = beta(a, b, c, x); !is_zero(v)) out(a, b, c, y, z) -= e.value * v;
        }
  }
  const Scalar half(1, 2);
  for (const auto& e1 : algebra.nonzeros()) {    // C^{u1}_{i s}
    for (const auto& e2 : algebra.nonzeros()) {  // C^{u2}_{j l}
      for (std::size_t idx = 0; idx < n; ++idx) {
        const Scalar& av = alpha(e1.right, e2.right, idx);
        if (is_zero(av)) continue;
        const Scalar term = half * e1.value * e2.value * av;
        out(e1.upper, e2.upper, e1.left, e2.left, idx) -= term;  // C^q_{is} C^r_{jl}
        out(e2.upper, e1.upper, e1.left, e2.left, idx) -= term;  // C^r_{is} C^q_{jl}
      }
    }
  }
  return out;
}

PoissonTensor linear_bracket(const LieAlgebra& algebra, const InvariantTheta& theta) {
  const std::size_t n = algebra.dim();
  require_dim(algebra, theta.nvars(), "theta");
  std::vector<Polynomial> components(n * n, Polynomial(n));
  for (const auto& e : algebra.nonzeros()) {
    components[e.left * n + e.right].add_product(Polynomial::variable(n, e.upper, e.value), theta.poly());
  }
  return PoissonTensor::from_components(algebra, std::move(components));
}

PoissonTensor quadratic_bracket(const LieAlgebra& algebra, const QuadraticBeta& beta) {
  const std::size_t n = algebra.dim();
  require_dim(algebra, beta.dim(), "beta");
  std::vector<Polynomial> components(n * n, Polynomial(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const Monomial m = Monomial::variable(k) * Monomial::variable(l);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) components[i * n + j].add_term(m, beta(k, l, i, j));
    }
  return PoissonTensor::from_components(algebra, std::move(components));
}

PoissonTensor build_bracket(const LieAlgebra& algebra, const RMatrix& r, const InvariantTheta& theta) {
  require_dim(algebra, r.dim(), "r-matrix");
  // Theta may have been validated against another algebra of the same size.
  const InvariantTheta checked = InvariantTheta::create(algebra, theta.poly());
  const std::size_t n = algebra.dim();
  const Tensor q = bracket_quadratic_coefficients(algebra, r);
  std::vector<Polynomial> components = linear_bracket(algebra, checked).components();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const Monomial m = Monomial::variable(k) * Monomial::variable(l);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) components[i * n + j].add_term(m, q(k, l, i, j));
    }
  return PoissonTensor::from_components(algebra, std::move(components));
}

PolynomialFamily jacobi_residual(const PoissonTensor& omega) { return jacobiator(omega, omega, false); }

PolynomialFamily compatibility_residual(const PoissonTensor& omega1, const PoissonTensor& omega2) {
  if (!(omega1.algebra() == omega2.algebra())) {
    raise(ErrorKind::AlgebraMismatch, "bivectors live over different algebras");
  }
  return jacobiator(omega1, omega2, true);
}

Tensor beta_jacobi_residual(const LieAlgebra& algebra, const QuadraticBeta& beta) {
  require_dim(algebra, beta.dim(), "beta");
  const std::size_t n = algebra.dim();
  struct Entry {
    std::size_t a, b, c;
    Scalar value;
  };
  // first[s] = beta^{qr}_{s i} as (q, r, i); second[s] = beta^{s m}_{j k} as (m, j, k)
  std::vector<std::vector<Entry>> first(n), second(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) {
          const Scalar& v = beta(x, y, z, w);
          if (is_zero(v)) continue;
          first[z].push_back({x, y, w, v});
          second[x].push_back({y, z, w, v});
        }
  Tensor base(6, n);  // base(q, r, m, i, j, k) = beta^{qr}_{si} beta^{sm}_{jk}
  for (std::size_t s = 0; s < n; ++s)
    for (const auto& f : first[s])
      for (const auto& g : second[s]) base(f.a, f.b, g.a, f.c, g.b, g.c) += f.value * g.value;

  std::vector<std::vector<std::size_t>> perms;
  const std::size_t upper[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  const std::size_t lower[3][3] = {{3, 4, 5}, {4, 5, 3}, {5, 3, 4}};
  for (const auto& u : upper)
    for (const auto& l : lower) perms.push_back({u[0], u[1], u[2], l[0], l[1], l[2]});
  return base.permutation_sum(perms);
}

Tensor eq22_form(const LieAlgebra& algebra, const RMatrix& r) {
  const std::size_t n = algebra.dim();
  const Tensor t = cybe_residual(algebra, r);
  // y(a, j, u, w) = C^a_{js} T^{suw}
  Tensor y(4, n);
  for (const auto& e : algebra.nonzeros())
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t w = 0; w < n; ++w) {
        const Scalar& tv = t(e.right, u, w);
        if (!is_zero(tv)) y(e.upper, e.left, u, w) += e.value * tv;
      }
  // z(a, j, b, k, w) = C^b_{ku} y(a, j, u, w)
  Tensor z(5, n);
  for (const auto& e : algebra.nonzeros())
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t w = 0; w < n; ++w) {
          const Scalar& yv = y(a, j, e.right, w);
          if (!is_zero(yv)) z(a, j, e.upper, e.left, w) += e.value * yv;
        }
  // x(a, b, c, i, j, k) = C^c_{iw} z(a, j, b, k, w)
  Tensor x(6, n);
  for (const auto& e : algebra.nonzeros())
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t k = 0; k < n; ++k) {
            const Scalar& zv = z(a, j, b, k, e.right);
            if (!is_zero(zv)) x(a, b, e.upper, e.left, j, k) += e.value * zv;
          }
  const auto perms = all_permutations_of_first_three(6);
  return x.permutation_sum(perms);
}

std::optional<Scalar> proportionality_constant(const Tensor& lhs, const Tensor& rhs) {
  if (lhs.rank() != rhs.rank() || lhs.dim() != rhs.dim()) {
    raise(ErrorKind::DimensionMismatch, "tensor shapes differ");
  }
  const auto pivot = rhs.first_nonzero();
  if (!pivot) {
    if (lhs.is_zero()) return Scalar(0);
    return std::nullopt;
  }
  const Scalar c = lhs.at(*pivot) / rhs.at(*pivot);
  const auto& a = lhs.flat();
  const auto& b = rhs.flat();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != c * b[k]) return std::nullopt;
  }
  return c;
}

std::size_t exact_rank(const RationalMatrix& matrix, EliminationOrder order) {
  const RationalMatrix& source = matrix;
  const bool transpose = order == EliminationOrder::TransposedReversed;
  const std::size_t rows = transpose ? source.cols() : source.rows();
  const std::size_t cols = transpose ? source.rows() : source.cols();
  auto entry = [&](std::size_t i, std::size_t j) -> const Scalar& {
    return transpose ? source(cols - 1 - j, i) : source(i, j);
  };

  // Integer rows, denominators cleared; all-zero rows dropped up front.
  std::vector<std::vector<mpz_class>> work;
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    bool any = false;
    for (std::size_t j = 0; j < cols; ++j) {
      const Scalar& v = entry(i, j);
      if (is_zero(v)) continue;
      any = true;
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    }
    if (!any) continue;
    std::vector<mpz_class> row(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      const Scalar& v = entry(i, j);
      if (!is_zero(v)) row[j] = v.get_num() * (lcm / v.get_den());
    }
    work.push_back(std::move(row));
  }

  std::size_t rank = 0;
  mpz_class previous = 1;
  mpz_class scratch;
  for (std::size_t col = 0; col < cols && rank < work.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < work.size() && work[pivot][col] == 0) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[rank], work[pivot]);
    const std::vector<mpz_class>& prow = work[rank];
    const mpz_class& p = prow[col];
    for (std::size_t i = rank + 1; i < work.size(); ++i) {
      std::vector<mpz_class>& row = work[i];
      const mpz_class factor = row[col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        // Bareiss step: (row_j * p - factor * prow_j) / previous, exact.
        scratch = row[j] * p - factor * prow[j];
        if (previous != 1) {
          if (!mpz_divisible_p(scratch.get_mpz_t(), previous.get_mpz_t())) {
            raise(ErrorKind::InvalidArgument, "fraction-free elimination lost exactness");
          }
          mpz_divexact(scratch.get_mpz_t(), scratch.get_mpz_t(), previous.get_mpz_t());
        }
        row[j] = scratch;
      }
      row[col] = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

KernelMap kernel_map_matrix(const LieAlgebra& algebra, std::size_t max_dim, EliminationOrder order) {
  const std::size_t n = algebra.dim();
  if (n > max_dim) {
    raise(ErrorKind::SizeGuardExceeded, "kernel map for dim " + std::to_string(n) + " exceeds guard " +
                                            std::to_string(max_dim));
  }
  const std::size_t n3 = n * n * n;
  KernelMap result{RationalMatrix(n3 * n3, n3), 0, 0};
  // Every assignment of the three upper indices of C^a_{js} C^b_{ku} C^c_{iw}
  // to the slots (q, m, r).
  const std::size_t slots[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& e1 : algebra.nonzeros())        // C^a_{js}
    for (const auto& e2 : algebra.nonzeros())      // C^b_{ku}
      for (const auto& e3 : algebra.nonzeros()) {  // C^c_{iw}
        const Scalar product = e1.value * e2.value * e3.value;
        const std::size_t ups[3] = {e1.upper, e2.upper, e3.upper};
        const std::size_t col = (e1.right * n + e2.right) * n + e3.right;
        for (const auto& slot : slots) {
          std::size_t qmr[3];
          for (std::size_t t = 0; t < 3; ++t) qmr[slot[t]] = ups[t];
          const std::size_t row = (((((qmr[0] * n + qmr[1]) * n + qmr[2]) * n + e3.left) * n + e1.left) * n) + e2.left;
          result.matrix(row, col) += product;
        }
      }
  result.rank = exact_rank(result.matrix, order);
  result.kernel_dimension = n3 - result.rank;
  return result;
}

PolynomialFamily infinitesimal_equivariance_residual(const LieAlgebra& algebra, const CocycleAlpha& alpha,
                                                     const PoissonTensor& omega) {
  const std::size_t n = algebra.dim();
  require_dim(algebra, alpha.dim(), "cocycle");
  require_dim(algebra, omega.dim(), "bivector");
  const auto fields = coadjoint_fields(algebra);
  const auto d = derivatives(omega);

  // source[(i * n + j) * n + n'] = C^s_{ik} C^p_{jl} alpha^{kl}_{n'} eta_s eta_p
  std::vector<Polynomial> source(n * n * n, Polynomial(n));
  for (const auto& e1 : algebra.nonzeros())      // C^s_{ik}
    for (const auto& e2 : algebra.nonzeros()) {  // C^p_{jl}
      const Monomial m = Monomial::variable(e1.upper) * Monomial::variable(e2.upper);
      for (std::size_t idx = 0; idx < n; ++idx) {
        const Scalar& av = alpha(e1.right, e2.right, idx);
        if (!is_zero(av)) source[(e1.left * n + e2.left) * n + idx].add_term(m, e1.value * e2.value * av);
      }
    }

  PolynomialFamily family{n, 3, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t idx = 0; idx < n; ++idx) {
        Polynomial total(n);
        for (std::size_t s = 0; s < n; ++s) total.add_product(fields[s * n + idx], d[s][i * n + j]);
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar& c1 = algebra.c(k, i, idx);
          if (!is_zero(c1)) total.add_scaled(omega(k, j), -c1);
          const Scalar& c2 = algebra.c(k, j, idx);
          if (!is_zero(c2)) total.add_scaled(omega(i, k), -c2);
        }
        total -= source[(i * n + j) * n + idx];
        if (!total.is_zero()) family.nonzero.push_back({{i, j, idx}, std::move(total)});
      }
  return family;
}

}  // namespace plk
