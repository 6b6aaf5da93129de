#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "plk/tensor.hpp"

namespace plk {

/// Coordinates xi^i of an element of the Lie algebra.
struct AlgebraVector {
  std::vector<Scalar> coords;

  std::size_t size() const noexcept { return coords.size(); }
  friend bool operator==(const AlgebraVector&, const AlgebraVector&) = default;
};

/// Coordinates eta_i of a point of the dual space.
struct DualVector {
  std::vector<Scalar> coords;

  std::size_t size() const noexcept { return coords.size(); }
  friend bool operator==(const DualVector&, const DualVector&) = default;
};

/// One nonzero structure constant C^upper_{left,right}.
struct StructureEntry {
  std::size_t upper;
  std::size_t left;
  std::size_t right;
  Scalar value;
};

/// A finite-dimensional Lie algebra given by its structure constants in a
/// fixed basis: [e_i, e_j] = C^k_{ij} e_k, stored as structure()(k, i, j).
///
/// Construction rejects tensors that are not antisymmetric in the lower
/// indices. The Jacobi identity is deliberately not enforced here so that
/// check_structure_jacobi can report which components fail.
class LieAlgebra {
 public:
  LieAlgebra(std::string name, Tensor structure);

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return structure_.dim(); }
  const Tensor& structure() const noexcept { return structure_; }
  const Scalar& c(std::size_t upper, std::size_t left, std::size_t right) const {
    return structure_(upper, left, right);
  }

  /// All nonzero C^k_{ij}, ordered by (k, i, j).
  const std::vector<StructureEntry>& nonzeros() const noexcept { return nonzeros_; }
  /// Nonzero C^k_{ij} grouped by the left lower index i.
  const std::vector<StructureEntry>& by_left(std::size_t i) const { return by_left_.at(i); }
  /// Nonzero C^k_{ij} grouped by the upper index k.
  const std::vector<StructureEntry>& by_upper(std::size_t k) const { return by_upper_.at(k); }

  bool is_abelian() const noexcept { return nonzeros_.empty(); }

  /// Same dimension and identical structure constants; names are ignored.
  friend bool operator==(const LieAlgebra& lhs, const LieAlgebra& rhs) {
    return lhs.structure_ == rhs.structure_;
  }

 private:
  std::string name_;
  Tensor structure_;
  std::vector<StructureEntry> nonzeros_;
  std::vector<std::vector<StructureEntry>> by_left_;
  std::vector<std::vector<StructureEntry>> by_upper_;
};

/// Throws DimensionMismatch unless `structure` is rank 3, then
/// NotAntisymmetric unless C^k_{ij} = -C^k_{ji}.
void validate_structure_tensor(const Tensor& structure);

/// residual(q, i, p, n) = C^s_{ip} C^q_{sn} + C^s_{ni} C^q_{sp} + C^s_{pn} C^q_{si}.
Tensor check_structure_jacobi(const LieAlgebra& algebra);
Tensor check_structure_jacobi(const Tensor& structure);

/// [x, y]^k = C^k_{ij} x^i y^j.
AlgebraVector bracket(const LieAlgebra& algebra, const AlgebraVector& x, const AlgebraVector& y);

/// (ad_zeta)^i_j = C^i_{sj} zeta^s, the matrix of y -> [zeta, y].
RationalMatrix ad_matrix(const LieAlgebra& algebra, const AlgebraVector& zeta);

/// (ad*_zeta)^i_j = -C^i_{sj} zeta^s.
RationalMatrix ad_star_matrix(const LieAlgebra& algebra, const AlgebraVector& zeta);

/// With the formula above, M(z1) M(z2) - M(z2) M(z1) = kAdStarCommutatorSign * M([z1, z2]).
/// Fixed once on sl2 and asserted for every algebra by the tests.
inline constexpr int kAdStarCommutatorSign = -1;

/// Row-major position of the matrix unit E_{row,col} in the gl(n) basis
/// (all indices 0-based): row * n + col.
std::size_t gl_flat_index(std::size_t n, std::size_t row, std::size_t col);

/// gl(n) in the matrix-unit basis, computed from [E_ab, E_cd] = d_bc E_ad - d_da E_cb.
LieAlgebra gl_structure_constants(std::size_t n);

/// Catalog: "abelian:<n>", "aff1", "heisenberg3", "sl2", "gl:<n>".
///   aff1:        [e1, e2] = e2
///   heisenberg3: basis (p, q, z), [p, q] = z
///   sl2:         basis (h, e, f), [h, e] = 2e, [h, f] = -2f, [e, f] = h
LieAlgebra builtin_algebra(std::string_view name);

/// Block-diagonal sum; the basis of `a` comes first.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace plk
