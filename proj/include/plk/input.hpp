#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plk/group.hpp"
#include "plk/lie_algebra.hpp"
#include "plk/polynomial.hpp"
#include "plk/rmatrix.hpp"

namespace plk {

/// Sparse tensor entry with 0-based indices in file order.
struct IndexedValue {
  std::vector<std::size_t> index;
  Scalar value;
  friend bool operator==(const IndexedValue&, const IndexedValue&) = default;
};

/// A parsed input file. Entries are held in canonical form: complete
/// (any lower-triangular shorthand already expanded), sorted by index,
/// zero values dropped.
struct InputDocument {
  std::size_t dim = 0;
  std::string name;
  std::vector<IndexedValue> structure;  // index (i, j, k): [e_i, e_j] has e_k-coefficient value
  std::optional<std::vector<IndexedValue>> r;      // (i, j)
  std::optional<std::vector<IndexedValue>> alpha;  // (i, j, k): alpha^{ij}_k
  std::optional<std::vector<IndexedValue>> theta;  // exponent vector -> coefficient
  std::optional<std::vector<std::vector<std::vector<Scalar>>>> matrix_basis;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;

  /// Throws NotAntisymmetric and friends from the underlying constructors.
  LieAlgebra algebra() const;
  /// The zero r-matrix when none was given.
  RMatrix r_matrix() const;
  std::optional<CocycleAlpha> cocycle() const;
  /// The constant 1 when no theta was given.
  Polynomial theta_polynomial() const;
  std::optional<std::vector<RealMatrix>> real_basis() const;
};

/// Parses the JSON input format documented in the README. Errors:
/// ParseError (with line and column), MissingField, IndexOutOfRange,
/// DuplicateEntry, NonRationalValue, DimensionMismatch.
InputDocument parse_input(std::string_view text);

/// Canonical JSON text of a document; parse_input reads it back unchanged.
std::string emit_input(const InputDocument& doc);

}  // namespace plk
