#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plk/rational.hpp"

namespace plk {

/// Dense rational tensor whose indices all range over 0..dim-1. Storage is
/// row-major: the last index varies fastest.
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::size_t rank, std::size_t dim);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return data_.size(); }

  template <typename... Index>
  Scalar& operator()(Index... index) {
    return data_[offset_of({static_cast<std::size_t>(index)...})];
  }
  template <typename... Index>
  const Scalar& operator()(Index... index) const {
    return data_[offset_of({static_cast<std::size_t>(index)...})];
  }

  Scalar& at(std::span<const std::size_t> index) { return data_[offset_of(index)]; }
  const Scalar& at(std::span<const std::size_t> index) const { return data_[offset_of(index)]; }

  std::vector<Scalar>& flat() noexcept { return data_; }
  const std::vector<Scalar>& flat() const noexcept { return data_; }

  /// Multi-index of a flat storage position.
  std::vector<std::size_t> unravel(std::size_t offset) const;
  std::size_t stride(std::size_t axis) const;

  bool is_zero() const;
  std::size_t nonzero_count() const;
  Scalar max_abs() const;
  std::optional<std::vector<std::size_t>> first_nonzero() const;

  /// result(i_0, ..., i_{r-1}) = (*this)(i_{perm[0]}, ..., i_{perm[r-1]}).
  Tensor permuted(std::span<const std::size_t> perm) const;
  /// Sum over the given axis permutations of permuted(perm), without
  /// materializing the intermediate tensors.
  Tensor permutation_sum(std::span<const std::vector<std::size_t>> perms) const;

  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other);
  Tensor& operator*=(const Scalar& factor);

  friend Tensor operator+(Tensor lhs, const Tensor& rhs) { return lhs += rhs; }
  friend Tensor operator-(Tensor lhs, const Tensor& rhs) { return lhs -= rhs; }
  friend Tensor operator*(const Scalar& factor, Tensor t) { return t *= factor; }
  friend bool operator==(const Tensor& lhs, const Tensor& rhs);

  /// "[i,j,k]=value" with 1-based indices, for diagnostics.
  std::string describe_entry(std::span<const std::size_t> index) const;

 private:
  std::size_t offset_of(std::span<const std::size_t> index) const;
  std::size_t offset_of(std::initializer_list<std::size_t> index) const {
    return offset_of(std::span<const std::size_t>(index.begin(), index.size()));
  }
  void require_same_shape(const Tensor& other) const;
  void require_permutation(std::span<const std::size_t> perm) const;

  std::size_t rank_ = 0;
  std::size_t dim_ = 0;
  std::vector<Scalar> data_;
};

/// Exact dense matrix with arbitrary row and column counts.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t row, std::size_t col) { return data_[row * cols_ + col]; }
  const Scalar& operator()(std::size_t row, std::size_t col) const { return data_[row * cols_ + col]; }

  bool is_zero() const;
  RationalMatrix transposed() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalMatrix operator-(const RationalMatrix& rhs) const;
  RationalMatrix operator*(const Scalar& factor) const;
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace plk
