#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "orbitkit/error.hpp"
#include "orbitkit/gaussian_rational.hpp"
#include "orbitkit/jet.hpp"

namespace orbitkit {

/// Dense row-major matrix over an exact scalar ring T (GaussianRational or a Jet).
template <typename T>
class Matrix {
 public:
  using Scalar = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw Error(ErrorCode::kDimensionMismatch, "matrix data size");
  }

  static Matrix zero(std::size_t n) { return Matrix(n, n); }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  /// e_{ij}: one in row i, column j.
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = T(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw Error(ErrorCode::kDimensionMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const T& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw Error(ErrorCode::kIndexOutOfRange, "matrix index");
    return (*this)(i, j);
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!orbitkit::is_zero(x)) return false;
    }
    return true;
  }

  Matrix operator-() const {
    Matrix r(*this);
    for (auto& x : r.data_) x = -x;
    return r;
  }

  Matrix& operator+=(const Matrix& b) {
    check_same_shape(b);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += b.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& b) {
    check_same_shape(b);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= b.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) {
      if (!orbitkit::is_zero(x)) x *= s;
    }
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::kDimensionMismatch, "matrix product shapes");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (orbitkit::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (orbitkit::is_zero(bkj)) continue;
          r(i, j) += aik * bkj;
        }
      }
    }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(ErrorCode::kDimensionMismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<GaussianRational>;

/// Lifts a constant matrix into the ring T.
template <typename T>
Matrix<T> lift_matrix(const QMatrix& m) {
  Matrix<T> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) r(i, j) = lift<T>(m(i, j));
  return r;
}

/// Value part of a jet matrix.
template <typename S>
Matrix<S> value_matrix(const Matrix<Jet<S>>& m) {
  Matrix<S> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).value();
  return r;
}

/// k-th partial of a jet matrix.
template <typename S>
Matrix<S> partial_matrix(const Matrix<Jet<S>>& m, std::size_t k) {
  Matrix<S> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).partial(k);
  return r;
}

/// Gauss-Jordan inverse with exact pivot tests; throws SingularMatrix.
template <typename T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw Error(ErrorCode::kDimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> a = m;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !is_unit(a(pivot, col))) ++pivot;
    if (pivot == n) throw Error(ErrorCode::kSingularMatrix, "matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    T scale = T(1) / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      T f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_zero(a(col, j))) a(r, j) -= f * a(col, j);
        if (!is_zero(inv(col, j))) inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

/// Determinant by exact elimination.
template <typename T>
T determinant(const Matrix<T>& m) {
  if (!m.is_square()) throw Error(ErrorCode::kDimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> a = m;
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !is_unit(a(pivot, col))) ++pivot;
    if (pivot == n) return T(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
      det = -det;
    }
    det *= a(col, col);
    T inv = T(1) / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(a(r, col))) continue;
      T f = a(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

/// One solution of A x = b (free variables set to zero), or nullopt when the
/// system is inconsistent. Exact row reduction over Q(i).
std::optional<std::vector<GaussianRational>> solve_linear(const QMatrix& a, const std::vector<GaussianRational>& b);

}  // namespace orbitkit
