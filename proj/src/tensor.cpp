#include "plk/tensor.hpp"

#include <sstream>

#include "plk/error.hpp"

namespace plk {

namespace {

std::size_t checked_pow(std::size_t base, std::size_t exponent) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > (std::size_t{1} << 40) / base) {
      raise(ErrorKind::SizeGuardExceeded, "tensor too large to materialize");
    }
    result *= base;
  }
  return result;
}

}  // namespace

Tensor::Tensor(std::size_t rank, std::size_t dim)
    : rank_(rank), dim_(dim), data_(checked_pow(dim, rank)) {}

std::size_t Tensor::stride(std::size_t axis) const {
  std::size_t s = 1;
  for (std::size_t a = axis + 1; a < rank_; ++a) s *= dim_;
  return s;
}

std::size_t Tensor::offset_of(std::span<const std::size_t> index) const {
  if (index.size() != rank_) {
    raise(ErrorKind::DimensionMismatch, "tensor of rank " + std::to_string(rank_) + " indexed with " +
                                            std::to_string(index.size()) + " indices");
  }
  std::size_t offset = 0;
  for (std::size_t i : index) {
    if (i >= dim_) raise(ErrorKind::IndexOutOfRange, "tensor index out of range");
    offset = offset * dim_ + i;
  }
  return offset;
}

std::vector<std::size_t> Tensor::unravel(std::size_t offset) const {
  std::vector<std::size_t> index(rank_);
  for (std::size_t a = rank_; a-- > 0;) {
    index[a] = offset % dim_;
    offset /= dim_;
  }
  return index;
}

bool Tensor::is_zero() const {
  for (const auto& v : data_) {
    if (!plk::is_zero(v)) return false;
  }
  return true;
}

std::size_t Tensor::nonzero_count() const {
  std::size_t count = 0;
  for (const auto& v : data_) count += plk::is_zero(v) ? 0 : 1;
  return count;
}

Scalar Tensor::max_abs() const {
  Scalar best = 0;
  for (const auto& v : data_) {
    if (cmp(abs(v), best) > 0) best = abs(v);
  }
  return best;
}

std::optional<std::vector<std::size_t>> Tensor::first_nonzero() const {
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!plk::is_zero(data_[k])) return unravel(k);
  }
  return std::nullopt;
}

void Tensor::require_permutation(std::span<const std::size_t> perm) const {
  if (perm.size() != rank_) raise(ErrorKind::DimensionMismatch, "permutation length differs from rank");
  std::vector<bool> seen(rank_, false);
  for (std::size_t a : perm) {
    if (a >= rank_ || seen[a]) raise(ErrorKind::InvalidArgument, "axis list is not a permutation");
    seen[a] = true;
  }
}

Tensor Tensor::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != rank_) raise(ErrorKind::DimensionMismatch, "permutation length differs from rank");
  Tensor out(rank_, dim_);
  require_permutation(perm);
  // Output axis perm[b] reads source axis b.
  std::vector<std::size_t> src_stride(rank_);
  for (std::size_t b = 0; b < rank_; ++b) src_stride[perm[b]] = stride(b);
  std::vector<std::size_t> index(rank_, 0);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    std::size_t src = 0;
    for (std::size_t a = 0; a < rank_; ++a) src += index[a] * src_stride[a];
    out.data_[k] = data_[src];
    for (std::size_t a = rank_; a-- > 0;) {
      if (++index[a] < dim_) break;
      index[a] = 0;
    }
  }
  return out;
}

Tensor Tensor::permutation_sum(std::span<const std::vector<std::size_t>> perms) const {
  Tensor out(rank_, dim_);
  std::vector<std::vector<std::size_t>> src_stride(perms.size(), std::vector<std::size_t>(rank_));
  for (std::size_t p = 0; p < perms.size(); ++p) {
    require_permutation(perms[p]);
    for (std::size_t b = 0; b < rank_; ++b) src_stride[p][perms[p][b]] = stride(b);
  }
  std::vector<std::size_t> index(rank_, 0);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    for (const auto& strides : src_stride) {
      std::size_t src = 0;
      for (std::size_t a = 0; a < rank_; ++a) src += index[a] * strides[a];
      if (!plk::is_zero(data_[src])) out.data_[k] += data_[src];
    }
    for (std::size_t a = rank_; a-- > 0;) {
      if (++index[a] < dim_) break;
      index[a] = 0;
    }
  }
  return out;
}

void Tensor::require_same_shape(const Tensor& other) const {
  if (rank_ != other.rank_ || dim_ != other.dim_) {
    raise(ErrorKind::DimensionMismatch, "tensor shapes differ");
  }
}

Tensor& Tensor::operator+=(const Tensor& other) {
  require_same_shape(other);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!plk::is_zero(other.data_[k])) data_[k] += other.data_[k];
  }
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
  require_same_shape(other);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!plk::is_zero(other.data_[k])) data_[k] -= other.data_[k];
  }
  return *this;
}

Tensor& Tensor::operator*=(const Scalar& factor) {
  for (auto& v : data_) {
    if (!plk::is_zero(v)) v *= factor;
  }
  return *this;
}

bool operator==(const Tensor& lhs, const Tensor& rhs) {
  return lhs.rank_ == rhs.rank_ && lhs.dim_ == rhs.dim_ && lhs.data_ == rhs.data_;
}

std::string Tensor::describe_entry(std::span<const std::size_t> index) const {
  std::ostringstream out;
  out << '[';
  for (std::size_t a = 0; a < index.size(); ++a) out << (a ? "," : "") << index[a] + 1;
  out << "]=" << format_rational(at(index));
  return out.str();
}

bool RationalMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (!plk::is_zero(v)) return false;
  }
  return true;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) raise(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (plk::is_zero(a)) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (!plk::is_zero(rhs(k, j))) out(i, j) += a * rhs(k, j);
      }
    }
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) raise(ErrorKind::DimensionMismatch, "matrix shapes differ");
  RationalMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= rhs.data_[k];
  return out;
}

RationalMatrix RationalMatrix::operator*(const Scalar& factor) const {
  RationalMatrix out = *this;
  for (auto& v : out.data_) v *= factor;
  return out;
}

}  // namespace plk
