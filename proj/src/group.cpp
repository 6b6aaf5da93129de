#include "plk/group.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <string>

#include "plk/error.hpp"

namespace plk {

namespace {

double max_abs(const RealMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

RealMatrix unit(std::size_t m, std::size_t row, std::size_t col) {
  RealMatrix e = RealMatrix::Zero(m, m);
  e(row, col) = 1.0;
  return e;
}

void require_finite(const RealVector& v, const char* what) {
  if (!v.allFinite()) raise(ErrorKind::NonFinite, std::string(what) + " has non-finite entries");
}

void require_dim(const MatrixGroupModel& model, std::size_t dim, const char* what) {
  if (dim != model.dim()) {
    raise(ErrorKind::DimensionMismatch, std::string(what) + " has dimension " + std::to_string(dim) +
                                            ", model has " + std::to_string(model.dim()));
  }
}

}  // namespace

MatrixGroupModel::MatrixGroupModel(LieAlgebra algebra, std::vector<RealMatrix> basis)
    : algebra_(std::move(algebra)), basis_(std::move(basis)) {
  const std::size_t n = algebra_.dim();
  if (basis_.size() != n) {
    raise(ErrorKind::DimensionMismatch, "model has " + std::to_string(basis_.size()) + " basis matrices for a " +
                                            std::to_string(n) + "-dimensional algebra");
  }
  ambient_ = n == 0 ? 0 : static_cast<std::size_t>(basis_.front().rows());
  for (const auto& x : basis_) {
    if (static_cast<std::size_t>(x.rows()) != ambient_ || static_cast<std::size_t>(x.cols()) != ambient_) {
      raise(ErrorKind::DimensionMismatch, "basis matrices must all be square of the same size");
    }
    if (!x.allFinite()) raise(ErrorKind::NonFinite, "basis matrix has non-finite entries");
  }

  flattened_.resize(static_cast<Eigen::Index>(ambient_ * ambient_), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    flattened_.col(static_cast<Eigen::Index>(i)) = basis_[i].reshaped();
  }
  solver_.compute(flattened_);
  if (static_cast<std::size_t>(solver_.rank()) != n) {
    raise(ErrorKind::BasisDegenerate, "basis matrices are linearly dependent (rank " +
                                          std::to_string(solver_.rank()) + " of " + std::to_string(n) + ")");
  }

  structure_.resize(n * n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) structure_[(k * n + i) * n + j] = to_double(algebra_.c(k, i, j));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RealMatrix defect = basis_[i] * basis_[j] - basis_[j] * basis_[i];
      for (std::size_t k = 0; k < n; ++k) defect -= c(k, i, j) * basis_[k];
      if (max_abs(defect) > kClosureTolerance) {
        raise(ErrorKind::ClosureViolated, "[X" + std::to_string(i + 1) + ", X" + std::to_string(j + 1) +
                                              "] differs from C^k_ij X_k by " + std::to_string(max_abs(defect)));
      }
    }
}

RealMatrix MatrixGroupModel::element_of(const RealVector& xi) const {
  require_dim(*this, static_cast<std::size_t>(xi.size()), "algebra element");
  RealMatrix m = RealMatrix::Zero(static_cast<Eigen::Index>(ambient_), static_cast<Eigen::Index>(ambient_));
  for (std::size_t i = 0; i < dim(); ++i) m += xi(static_cast<Eigen::Index>(i)) * basis_[i];
  return m;
}

RealVector MatrixGroupModel::coordinates(const RealMatrix& m) const {
  const RealVector flat = m.reshaped();
  RealVector coords = solver_.solve(flat);
  const double defect = (flattened_ * coords - flat).cwiseAbs().maxCoeff();
  if (defect > kExpansionTolerance * std::max(1.0, flat.cwiseAbs().maxCoeff())) {
    raise(ErrorKind::ClosureViolated, "matrix is not in the span of the basis (defect " + std::to_string(defect) + ")");
  }
  return coords;
}

std::vector<RealMatrix> default_matrix_basis(std::string_view name) {
  const LieAlgebra algebra = builtin_algebra(name);
  const std::size_t n = algebra.dim();
  if (name == "aff1") return {unit(2, 0, 0), unit(2, 0, 1)};
  if (name == "heisenberg3") return {unit(3, 0, 1), unit(3, 1, 2), unit(3, 0, 2)};
  if (name == "sl2") {
    RealMatrix h = unit(2, 0, 0) - unit(2, 1, 1);
    return {h, unit(2, 0, 1), unit(2, 1, 0)};
  }
  std::vector<RealMatrix> basis;
  if (name.starts_with("gl:")) {
    std::size_t m = 0;
    while (m * m < n) ++m;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) basis.push_back(unit(m, a, b));
    return basis;
  }
  // abelian:n
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit(n, i, i));
  return basis;
}

MatrixGroupModel default_matrix_model(std::string_view name) {
  return MatrixGroupModel(builtin_algebra(name), default_matrix_basis(name));
}

GroupElement::GroupElement(RealMatrix y) : y_(std::move(y)) {
  if (y_.rows() != y_.cols()) raise(ErrorKind::DimensionMismatch, "group element must be square");
  if (!y_.allFinite()) raise(ErrorKind::NonFinite, "group element has non-finite entries");
  Eigen::PartialPivLU<RealMatrix> lu(y_);
  const double det = y_.size() == 0 ? 1.0 : lu.determinant();
  if (!(std::abs(det) > kDeterminantFloor)) {
    raise(ErrorKind::SingularElement, "|det y| = " + std::to_string(std::abs(det)) + " is below the floor");
  }
  inverse_ = lu.inverse();
}

SigmaTensor::SigmaTensor(RealMatrix values) : values_(std::move(values)) {
  const double skew = max_abs(values_ + values_.transpose());
  if (skew > kExpansionTolerance * std::max(1.0, max_abs(values_))) {
    raise(ErrorKind::NotSkew, "sigma deviates from skew-symmetry by " + std::to_string(skew));
  }
}

RealVector sample_unit_ball(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  RealVector v(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) v(static_cast<Eigen::Index>(i)) = uniform(rng);
  const double norm = v.norm();
  if (norm > 1.0) v /= norm;
  return v;
}

RealMatrix to_real(const Tensor& rank2) {
  if (rank2.rank() != 2) raise(ErrorKind::DimensionMismatch, "expected a rank-2 tensor");
  const auto n = static_cast<Eigen::Index>(rank2.dim());
  RealMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = to_double(rank2(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  return m;
}

GroupElement exp_element(const MatrixGroupModel& model, const RealVector& xi, double t) {
  require_finite(xi, "xi");
  if (!std::isfinite(t)) raise(ErrorKind::NonFinite, "t is not finite");
  const RealMatrix generator = t * model.element_of(xi);
  return GroupElement(generator.exp());
}

RealMatrix adjoint_matrix(const MatrixGroupModel& model, const GroupElement& y) {
  const std::size_t n = model.dim();
  RealMatrix a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    a.col(static_cast<Eigen::Index>(j)) = model.coordinates(y.matrix() * model.basis()[j] * y.inverse_matrix());
  }
  return a;
}

double ad_multiplicativity_residual(const MatrixGroupModel& model, const GroupElement& x, const GroupElement& y) {
  return max_abs(adjoint_matrix(model, x * y) - adjoint_matrix(model, x) * adjoint_matrix(model, y));
}

double ad_inverse_residual(const MatrixGroupModel& model, const GroupElement& y) {
  const RealMatrix product = adjoint_matrix(model, y) * adjoint_matrix(model, y.inverse());
  return max_abs(product - RealMatrix::Identity(product.rows(), product.cols()));
}

RealMatrix ad_derivative_at_identity(const MatrixGroupModel& model, const RealVector& xi, double h) {
  const RealMatrix plus = adjoint_matrix(model, exp_element(model, xi, h));
  const RealMatrix minus = adjoint_matrix(model, exp_element(model, xi, -h));
  return (plus - minus) / (2.0 * h);
}

double ad_derivative_residual(const MatrixGroupModel& model, const RealVector& xi, double h) {
  const std::size_t n = model.dim();
  RealMatrix expected = RealMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t s = 0; s < n; ++s)
        expected(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) +=
            model.c(i, s, j) * xi(static_cast<Eigen::Index>(s));
  return max_abs(ad_derivative_at_identity(model, xi, h) - expected);
}

double ad_invariance_residual(const MatrixGroupModel& model, const GroupElement& y) {
  const std::size_t n = model.dim();
  const RealMatrix a = adjoint_matrix(model, y);
  const RealMatrix b = adjoint_matrix(model, y.inverse());
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        double total = 0.0;
        for (std::size_t s = 0; s < n; ++s)
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
              const double cs = model.c(s, p, q);
              if (cs != 0.0) total += a(i, s) * cs * b(p, j) * b(q, k);
            }
        worst = std::max(worst, std::abs(model.c(i, j, k) - total));
      }
  return worst;
}

SigmaTensor sigma_tensor(const MatrixGroupModel& model, const RMatrix& r, const GroupElement& y,
                         const std::optional<RMatrix>& r0) {
  require_dim(model, r.dim(), "r-matrix");
  const RealMatrix rr = to_real(r.values());
  const RealMatrix shift = r0 ? to_real(r0->values()) : RealMatrix(-rr);
  if (r0) require_dim(model, r0->dim(), "r0");
  const RealMatrix a = adjoint_matrix(model, y);
  return SigmaTensor(a * rr * a.transpose() + shift);
}

double sigma_cocycle_residual(const MatrixGroupModel& model, const RMatrix& r, const GroupElement& x,
                              const GroupElement& y, const std::optional<RMatrix>& r0) {
  const RealMatrix ax = adjoint_matrix(model, x);
  const RealMatrix lhs = sigma_tensor(model, r, x * y, r0).values();
  const RealMatrix rhs =
      sigma_tensor(model, r, x, r0).values() + ax * sigma_tensor(model, r, y, r0).values() * ax.transpose();
  return max_abs(lhs - rhs);
}

double sigma_pde_residual(const MatrixGroupModel& model, const RMatrix& r, const GroupElement& x, std::size_t k,
                          double h) {
  const std::size_t n = model.dim();
  if (k >= n) raise(ErrorKind::IndexOutOfRange, "direction " + std::to_string(k + 1) + " out of range");
  RealVector direction = RealVector::Zero(static_cast<Eigen::Index>(n));
  direction(static_cast<Eigen::Index>(k)) = 1.0;
  const RealMatrix plus = sigma_tensor(model, r, x * exp_element(model, direction, h)).values();
  const RealMatrix minus = sigma_tensor(model, r, x * exp_element(model, direction, -h)).values();
  const RealMatrix lhs = (plus - minus) / (2.0 * h);

  const CocycleAlpha alpha = coboundary_cocycle(model.algebra(), r);
  RealMatrix alpha_k(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      alpha_k(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = to_double(alpha(i, j, k));
  const RealMatrix a = adjoint_matrix(model, x);
  return max_abs(lhs - a * alpha_k * a.transpose());
}

double coadjoint_equivariance_residual(const MatrixGroupModel& model, const RMatrix& r, const InvariantTheta& theta,
                                       const GroupElement& y, const RealVector& eta) {
  if (!cybe_residual(model.algebra(), r).is_zero()) {
    raise(ErrorKind::CYBEViolated, "r does not solve the classical Yang-Baxter equation");
  }
  const PoissonTensor omega = build_bracket(model.algebra(), r, theta);
  return coadjoint_equivariance_residual(model, omega, r, y, eta);
}

double coadjoint_equivariance_residual(const MatrixGroupModel& model, const PoissonTensor& omega, const RMatrix& r,
                                       const GroupElement& y, const RealVector& eta) {
  const std::size_t n = model.dim();
  require_dim(model, omega.dim(), "bivector");
  require_dim(model, static_cast<std::size_t>(eta.size()), "eta");
  require_finite(eta, "eta");
  const RealMatrix b = adjoint_matrix(model, y.inverse());  // A(y^{-1})
  const RealMatrix sigma = sigma_tensor(model, r, y).values();

  auto evaluate = [&](const RealVector& point) {
    const std::vector<double> coords(point.data(), point.data() + point.size());
    RealMatrix w(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = omega(i, j).evaluate(std::span(coords));
    return w;
  };

  const RealMatrix lhs = evaluate(b.transpose() * eta);
  // zeta_m = A^s_m(y^{-1}) eta_s, so the sigma term is C^m_{iq} C^n_{jt} zeta_m zeta_n sigma^{qt}.
  const RealVector zeta = b.transpose() * eta;
  RealMatrix k(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));  // k(i, q) = C^m_{iq} zeta_m
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = 0; q < n; ++q) {
      double total = 0.0;
      for (std::size_t m = 0; m < n; ++m) total += model.c(m, i, q) * zeta(static_cast<Eigen::Index>(m));
      k(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(q)) = total;
    }
  const RealMatrix rhs = b.transpose() * evaluate(eta) * b + k * sigma * k.transpose();
  return max_abs(lhs - rhs);
}

double group_law_sanity(const MatrixGroupModel& model, const GroupElement& x) {
  const auto m = static_cast<Eigen::Index>(model.ambient());
  if (x.matrix().rows() != m) raise(ErrorKind::DimensionMismatch, "element size differs from the model");
  const RealMatrix id = RealMatrix::Identity(m, m);
  return std::max(max_abs(x.matrix() * x.inverse_matrix() - id), max_abs(x.inverse_matrix() * x.matrix() - id));
}

}  // namespace plk
