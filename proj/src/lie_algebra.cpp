#include "plk/lie_algebra.hpp"

#include <charconv>

#include "plk/error.hpp"

namespace plk {

namespace {

void require_size(const LieAlgebra& algebra, std::size_t size, const char* what) {
  if (size != algebra.dim()) {
    raise(ErrorKind::DimensionMismatch, std::string(what) + " has length " + std::to_string(size) +
                                            ", algebra dimension is " + std::to_string(algebra.dim()));
  }
}

Tensor structure_from_brackets(std::size_t dim,
                               std::initializer_list<std::tuple<std::size_t, std::size_t, std::size_t, int>> entries) {
  Tensor c(3, dim);
  for (const auto& [i, j, k, value] : entries) {
    c(k, i, j) = value;
    c(k, j, i) = -value;
  }
  return c;
}

std::size_t parse_size_suffix(std::string_view name, std::string_view prefix) {
  const std::string_view digits = name.substr(prefix.size());
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || value < 1) {
    raise(ErrorKind::UnknownAlgebra, "bad size in algebra name '" + std::string(name) + "'");
  }
  return value;
}

}  // namespace

void validate_structure_tensor(const Tensor& structure) {
  if (structure.rank() != 3 || structure.dim() == 0) {
    raise(ErrorKind::DimensionMismatch, "structure constants must form an (n,n,n) tensor with n >= 1");
  }
  const std::size_t n = structure.dim();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        if (structure(k, i, j) != -structure(k, j, i)) {
          raise(ErrorKind::NotAntisymmetric, "C^" + std::to_string(k + 1) + "_{" + std::to_string(i + 1) +
                                                 std::to_string(j + 1) + "} != -C^" + std::to_string(k + 1) +
                                                 "_{" + std::to_string(j + 1) + std::to_string(i + 1) + "}");
        }
      }
}

LieAlgebra::LieAlgebra(std::string name, Tensor structure)
    : name_(std::move(name)), structure_(std::move(structure)) {
  validate_structure_tensor(structure_);
  const std::size_t n = structure_.dim();
  by_left_.resize(n);
  by_upper_.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& v = structure_(k, i, j);
        if (plk::is_zero(v)) continue;
        StructureEntry entry{k, i, j, v};
        nonzeros_.push_back(entry);
        by_left_[i].push_back(entry);
        by_upper_[k].push_back(std::move(entry));
      }
}

Tensor check_structure_jacobi(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  Tensor residual(4, n);
  // residual(q, i, p, n') with the three cyclic terms accumulated separately.
  for (const auto& outer : algebra.nonzeros()) {
    for (const auto& inner : algebra.by_left(outer.upper)) {
      const Scalar product = outer.value * inner.value;
      // C^s_{ip} C^q_{sn}
      residual(inner.upper, outer.left, outer.right, inner.right) += product;
      // C^s_{ni} C^q_{sp}: outer = (s; n, i), inner = (q; s, p)
      residual(inner.upper, outer.right, inner.right, outer.left) += product;
      // C^s_{pn} C^q_{si}: outer = (s; p, n), inner = (q; s, i)
      residual(inner.upper, inner.right, outer.left, outer.right) += product;
    }
  }
  return residual;
}

Tensor check_structure_jacobi(const Tensor& structure) {
  validate_structure_tensor(structure);
  return check_structure_jacobi(LieAlgebra("unnamed", structure));
}

AlgebraVector bracket(const LieAlgebra& algebra, const AlgebraVector& x, const AlgebraVector& y) {
  require_size(algebra, x.size(), "x");
  require_size(algebra, y.size(), "y");
  AlgebraVector z{std::vector<Scalar>(algebra.dim())};
  for (const auto& e : algebra.nonzeros()) {
    if (plk::is_zero(x.coords[e.left]) || plk::is_zero(y.coords[e.right])) continue;
    z.coords[e.upper] += e.value * x.coords[e.left] * y.coords[e.right];
  }
  return z;
}

RationalMatrix ad_matrix(const LieAlgebra& algebra, const AlgebraVector& zeta) {
  require_size(algebra, zeta.size(), "zeta");
  RationalMatrix m(algebra.dim(), algebra.dim());
  for (const auto& e : algebra.nonzeros()) {
    if (!plk::is_zero(zeta.coords[e.left])) m(e.upper, e.right) += e.value * zeta.coords[e.left];
  }
  return m;
}

RationalMatrix ad_star_matrix(const LieAlgebra& algebra, const AlgebraVector& zeta) {
  require_size(algebra, zeta.size(), "zeta");
  RationalMatrix m(algebra.dim(), algebra.dim());
  for (const auto& e : algebra.nonzeros()) {
    if (!plk::is_zero(zeta.coords[e.left])) m(e.upper, e.right) -= e.value * zeta.coords[e.left];
  }
  return m;
}

std::size_t gl_flat_index(std::size_t n, std::size_t row, std::size_t col) {
  if (row >= n || col >= n) raise(ErrorKind::IndexOutOfRange, "gl index out of range");
  return row * n + col;
}

LieAlgebra gl_structure_constants(std::size_t n) {
  if (n < 1) raise(ErrorKind::InvalidArgument, "gl(n) needs n >= 1");
  const std::size_t dim = n * n;
  Tensor c(3, dim);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t cc = 0; cc < n; ++cc)
        for (std::size_t d = 0; d < n; ++d) {
          const std::size_t left = gl_flat_index(n, a, b);
          const std::size_t right = gl_flat_index(n, cc, d);
          // [E_ab, E_cd] = d_bc E_ad - d_da E_cb
          if (b == cc) c(gl_flat_index(n, a, d), left, right) += 1;
          if (d == a) c(gl_flat_index(n, cc, b), left, right) -= 1;
        }
  return LieAlgebra("gl:" + std::to_string(n), std::move(c));
}

LieAlgebra builtin_algebra(std::string_view name) {
  if (name.starts_with("abelian:")) {
    const std::size_t n = parse_size_suffix(name, "abelian:");
    return LieAlgebra(std::string(name), Tensor(3, n));
  }
  if (name.starts_with("gl:")) return gl_structure_constants(parse_size_suffix(name, "gl:"));
  if (name == "aff1") return LieAlgebra("aff1", structure_from_brackets(2, {{0, 1, 1, 1}}));
  if (name == "heisenberg3") return LieAlgebra("heisenberg3", structure_from_brackets(3, {{0, 1, 2, 1}}));
  if (name == "sl2") {
    return LieAlgebra("sl2", structure_from_brackets(3, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}}));
  }
  raise(ErrorKind::UnknownAlgebra, "no catalog entry named '" + std::string(name) + "'");
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t na = a.dim();
  Tensor c(3, na + b.dim());
  for (const auto& e : a.nonzeros()) c(e.upper, e.left, e.right) = e.value;
  for (const auto& e : b.nonzeros()) c(na + e.upper, na + e.left, na + e.right) = e.value;
  return LieAlgebra(a.name() + "+" + b.name(), std::move(c));
}

}  // namespace plk
