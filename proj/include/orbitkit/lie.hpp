#pragma once

#include <compare>
#include <cstddef>

#include "orbitkit/matrix.hpp"

namespace orbitkit {

/// Root e_i - e_j of gl_n (i != j). The root vector is the elementary matrix
/// e_{ij}; its negative is e_{ji}, so tr(E_{-a} E_a) = 1.
struct Root {
  int i = 0;
  int j = 0;

  bool positive() const noexcept { return i < j; }
  int height() const noexcept { return j - i; }
  Root negative() const noexcept { return {j, i}; }

  friend auto operator<=>(const Root&, const Root&) = default;
};

template <typename T>
Matrix<T> root_vector(std::size_t n, const Root& a) {
  return Matrix<T>::unit(n, static_cast<std::size_t>(a.i), static_cast<std::size_t>(a.j));
}

/// [A, B] = AB - BA.
template <typename T>
Matrix<T> bracket(const Matrix<T>& a, const Matrix<T>& b) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "bracket of differently sized matrices");
  }
  return a * b - b * a;
}

/// B(A, B) = tr(AB), computed without forming the product.
template <typename T>
T trace_form(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.cols() || a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "trace form of differently sized matrices");
  }
  T t(0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k)) || is_zero(b(k, i))) continue;
      t += a(i, k) * b(k, i);
    }
  return t;
}

namespace detail {

template <typename T>
Matrix<T> truncated_series(const Matrix<T>& x, bool logarithm) {
  const std::size_t n = x.rows();
  Matrix<T> sum = logarithm ? Matrix<T>(n, n) : Matrix<T>::identity(n);
  Matrix<T> power = Matrix<T>::identity(n);
  GaussianRational factorial(1);
  for (std::size_t k = 1; k < n; ++k) {
    power = power * x;
    if (power.is_zero()) break;
    GaussianRational coeff;
    if (logarithm) {
      coeff = GaussianRational(k % 2 == 1 ? 1 : -1) / GaussianRational(static_cast<long>(k));
    } else {
      factorial *= GaussianRational(static_cast<long>(k));
      coeff = factorial.inverse();
    }
    sum += power * lift<T>(coeff);
  }
  return sum;
}

template <typename T>
bool nilpotent(const Matrix<T>& x) {
  Matrix<T> power = Matrix<T>::identity(x.rows());
  for (std::size_t k = 0; k < x.rows(); ++k) {
    power = power * x;
    if (power.is_zero()) return true;
  }
  return x.rows() == 0;
}

}  // namespace detail

/// exp(N) = sum_{k<n} N^k / k! for nilpotent N; throws NotNilpotent otherwise.
template <typename T>
Matrix<T> exp_nilpotent(const Matrix<T>& x) {
  if (!x.is_square()) throw Error(ErrorCode::kDimensionMismatch, "exp of non-square matrix");
  if (!detail::nilpotent(x)) throw Error(ErrorCode::kNotNilpotent, "N^n != 0");
  return detail::truncated_series(x, false);
}

/// log(U) = sum_k (-1)^{k+1} (U - I)^k / k for unipotent U; throws NotUnipotent.
template <typename T>
Matrix<T> log_unipotent(const Matrix<T>& u) {
  if (!u.is_square()) throw Error(ErrorCode::kDimensionMismatch, "log of non-square matrix");
  Matrix<T> x = u - Matrix<T>::identity(u.rows());
  if (!detail::nilpotent(x)) throw Error(ErrorCode::kNotUnipotent, "U - I is not nilpotent");
  return detail::truncated_series(x, true);
}

/// Ad*(g) F = g F g^{-1} under the trace-form identification; throws SingularMatrix.
template <typename T>
Matrix<T> coadjoint(const Matrix<T>& g, const Matrix<T>& f) {
  if (g.rows() != f.rows() || !g.is_square() || !f.is_square()) {
    throw Error(ErrorCode::kDimensionMismatch, "coadjoint of differently sized matrices");
  }
  return g * f * inverse(g);
}

}  // namespace orbitkit
