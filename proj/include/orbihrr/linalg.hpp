#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "orbihrr/errors.hpp"

namespace orbihrr {

/// Dense row-major matrix over an exact field F.
///
/// F must be constructible from int and provide the field operators plus
/// `is_zero()` and `inverse()`.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<F> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw Mismatch("matrix data size does not match shape");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  F trace() const {
    if (!is_square()) throw Mismatch("trace of a non-square matrix");
    F t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator*=(const F& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator*(Matrix a, const F& s) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Mismatch("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Kronecker product a ⊗ b.
  friend Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        if (a(i, j).is_zero()) continue;
        for (std::size_t p = 0; p < b.rows_; ++p)
          for (std::size_t q = 0; q < b.cols_; ++q) k(i * b.rows_ + p, j * b.cols_ + q) = a(i, j) * b(p, q);
      }
    return k;
  }

  friend Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, a.cols_ + j) = b(i, j);
    return m;
  }

  /// Gauss-Jordan inverse; throws NotInvertible for singular input.
  Matrix inverse() const {
    if (!is_square()) throw Mismatch("inverse of a non-square matrix");
    const std::size_t n = rows_;
    Matrix a = *this;
    Matrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && a(pivot, col).is_zero()) ++pivot;
      if (pivot == n) throw NotInvertible("singular matrix");
      a.swap_rows(pivot, col);
      inv.swap_rows(pivot, col);
      F scale = a(col, col).inverse();
      for (std::size_t j = 0; j < n; ++j) {
        a(col, j) *= scale;
        inv(col, j) *= scale;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || a(r, col).is_zero()) continue;
        F factor = a(r, col);
        for (std::size_t j = 0; j < n; ++j) {
          a(r, j) -= factor * a(col, j);
          inv(r, j) -= factor * inv(col, j);
        }
      }
    }
    return inv;
  }

  /// Rank by row reduction over F.
  std::size_t rank() const {
    Matrix a = *this;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
      std::size_t pivot = rank;
      while (pivot < rows_ && a(pivot, col).is_zero()) ++pivot;
      if (pivot == rows_) continue;
      a.swap_rows(pivot, rank);
      F inv = a(rank, col).inverse();
      for (std::size_t r = rank + 1; r < rows_; ++r) {
        if (a(r, col).is_zero()) continue;
        F factor = a(r, col) * inv;
        for (std::size_t j = col; j < cols_; ++j) a(r, j) -= factor * a(rank, j);
      }
      ++rank;
    }
    return rank;
  }

  /// Solves this * x = rhs; returns false when the system is inconsistent.
  /// Free variables are set to zero.
  bool solve(const std::vector<F>& rhs, std::vector<F>& x) const {
    if (rhs.size() != rows_) throw Mismatch("right-hand side length mismatch");
    Matrix a(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) a(i, j) = (*this)(i, j);
      a(i, cols_) = rhs[i];
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t pivot = row;
      while (pivot < rows_ && a(pivot, col).is_zero()) ++pivot;
      if (pivot == rows_) continue;
      a.swap_rows(pivot, row);
      F inv = a(row, col).inverse();
      for (std::size_t j = col; j <= cols_; ++j) a(row, j) *= inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || a(r, col).is_zero()) continue;
        F factor = a(r, col);
        for (std::size_t j = col; j <= cols_; ++j) a(r, j) -= factor * a(row, j);
      }
      pivot_cols.push_back(col);
      ++row;
    }
    for (std::size_t r = row; r < rows_; ++r)
      if (!a(r, cols_).is_zero()) return false;
    x.assign(cols_, F(0));
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = a(r, cols_);
    return true;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Mismatch("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

}  // namespace orbihrr
