#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "burau_lab/errors.hpp"

namespace burau_lab {

// Dense square matrix over an exact ring. The scalar type must provide
// +, -, *, == and be copyable; the ring's zero and one are passed in
// explicitly because some scalars (cyclotomic numbers) carry a field context.
template <class Scalar>
class SquareMatrix {
 public:
  SquareMatrix(std::size_t dim, const Scalar& fill)
      : dim_(dim), entries_(dim * dim, fill) {}

  static SquareMatrix identity(std::size_t dim, const Scalar& zero,
                               const Scalar& one) {
    SquareMatrix m(dim, zero);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = one;
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * dim_ + c];
  }
  Scalar& operator()(std::size_t r, std::size_t c) {
    return entries_[r * dim_ + c];
  }

  SquareMatrix operator*(const SquareMatrix& rhs) const {
    require_same_dim(rhs, "matrix product");
    if (dim_ == 0) return *this;
    const Scalar zero = (*this)(0, 0) - (*this)(0, 0);
    SquareMatrix out(dim_, zero);
    for (std::size_t r = 0; r < dim_; ++r) {
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& a = (*this)(r, k);
        if (a == zero) continue;
        for (std::size_t c = 0; c < dim_; ++c) {
          out(r, c) = out(r, c) + a * rhs(k, c);
        }
      }
    }
    return out;
  }

  SquareMatrix operator+(const SquareMatrix& rhs) const {
    require_same_dim(rhs, "matrix sum");
    SquareMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      out.entries_[i] = out.entries_[i] + rhs.entries_[i];
    return out;
  }

  SquareMatrix operator-(const SquareMatrix& rhs) const {
    require_same_dim(rhs, "matrix difference");
    SquareMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      out.entries_[i] = out.entries_[i] - rhs.entries_[i];
    return out;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

  void require_same_dim(const SquareMatrix& rhs, const char* op) const {
    if (rhs.dim_ != dim_) {
      throw DimensionMismatch(std::string(op) + ": " + std::to_string(dim_) +
                              " vs " + std::to_string(rhs.dim_));
    }
  }

 private:
  std::size_t dim_;
  std::vector<Scalar> entries_;
};

// A matrix equal to the identity except in one row. Every Artin generator
// image (and its inverse) has this shape, which turns a right multiplication
// into three column updates instead of a full matrix product.
template <class Scalar>
struct RowOperator {
  std::size_t dim = 0;
  std::size_t row = 0;
  // Sparse (column, value) entries of the distinguished row; the diagonal
  // entry is always present.
  std::vector<std::pair<std::size_t, Scalar>> entries;

  SquareMatrix<Scalar> to_matrix(const Scalar& zero, const Scalar& one) const {
    auto m = SquareMatrix<Scalar>::identity(dim, zero, one);
    for (const auto& [col, value] : entries) m(row, col) = value;
    return m;
  }
};

// m <- m * op. Scalar must also provide is_zero().
template <class Scalar>
void multiply_right(SquareMatrix<Scalar>& m, const RowOperator<Scalar>& op) {
  if (m.dim() != op.dim) throw DimensionMismatch("row operator dimension");
  const std::size_t k = op.row;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    if (m(r, k).is_zero()) continue;
    const Scalar pivot = m(r, k);
    for (const auto& [col, value] : op.entries) {
      if (col == k) {
        m(r, k) = pivot * value;
      } else {
        m(r, col) = m(r, col) + pivot * value;
      }
    }
  }
}

}  // namespace burau_lab
