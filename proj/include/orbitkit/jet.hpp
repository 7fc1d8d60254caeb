#pragma once

#include <algorithm>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "orbitkit/error.hpp"
#include "orbitkit/gaussian_rational.hpp"

namespace orbitkit {

/// First-order forward-mode jet over a scalar ring S: value + sum_k partial_k * d_k.
///
/// A jet with fewer stored partials than its peer is padded with zeros, so
/// constants carry an empty partial vector. S may itself be a Jet, which
/// gives exact mixed second derivatives when needed.
template <typename S = GaussianRational>
class Jet {
 public:
  using Scalar = S;

  Jet() = default;
  Jet(long c) : value_(c) {}  // NOLINT(google-explicit-constructor)
  Jet(const GaussianRational& c) requires(!std::is_same_v<S, GaussianRational>) : value_(c) {}  // NOLINT
  Jet(S value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Jet(S value, std::vector<S> partials) : value_(std::move(value)), partials_(std::move(partials)) {}

  /// Seed for differentiation: value a, partials = unit vector e_{var_index}.
  static Jet variable(S value, std::size_t var_index, std::size_t n_vars) {
    if (var_index >= n_vars) {
      throw Error(ErrorCode::kIndexOutOfRange, "jet variable index out of range");
    }
    std::vector<S> partials(n_vars, S(0));
    partials[var_index] = S(1);
    return Jet(std::move(value), std::move(partials));
  }

  const S& value() const noexcept { return value_; }
  const std::vector<S>& partials() const noexcept { return partials_; }
  std::size_t size() const noexcept { return partials_.size(); }
  /// Partial k; zero when k lies beyond the stored partials.
  S partial(std::size_t k) const { return k < partials_.size() ? partials_[k] : S(0); }

  Jet operator-() const {
    Jet r(-value_);
    r.partials_.reserve(partials_.size());
    for (const auto& p : partials_) r.partials_.push_back(-p);
    return r;
  }

  Jet& operator+=(const Jet& b) {
    value_ += b.value_;
    if (partials_.size() < b.partials_.size()) partials_.resize(b.partials_.size(), S(0));
    for (std::size_t k = 0; k < b.partials_.size(); ++k) partials_[k] += b.partials_[k];
    return *this;
  }

  Jet& operator-=(const Jet& b) {
    value_ -= b.value_;
    if (partials_.size() < b.partials_.size()) partials_.resize(b.partials_.size(), S(0));
    for (std::size_t k = 0; k < b.partials_.size(); ++k) partials_[k] -= b.partials_[k];
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r(a.value_ * b.value_);
    const std::size_t n = std::max(a.partials_.size(), b.partials_.size());
    if (n == 0) return r;
    r.partials_.assign(n, S(0));
    const bool a_zero = is_zero(a.value_);
    const bool b_zero = is_zero(b.value_);
    if (!b_zero) {
      for (std::size_t k = 0; k < a.partials_.size(); ++k) {
        if (!is_zero(a.partials_[k])) r.partials_[k] += b.value_ * a.partials_[k];
      }
    }
    if (!a_zero) {
      for (std::size_t k = 0; k < b.partials_.size(); ++k) {
        if (!is_zero(b.partials_[k])) r.partials_[k] += a.value_ * b.partials_[k];
      }
    }
    return r;
  }

  Jet& operator*=(const Jet& b) { return *this = *this * b; }

  /// Quotient rule; throws DivisionByZero when the value of b is zero.
  friend Jet operator/(const Jet& a, const Jet& b) {
    if (!is_unit(b.value_)) throw Error(ErrorCode::kDivisionByZero, "jet division by zero value");
    S inv = S(1) / b.value_;
    Jet r(a.value_ * inv);
    const std::size_t n = std::max(a.partials_.size(), b.partials_.size());
    if (n == 0) return r;
    r.partials_.assign(n, S(0));
    for (std::size_t k = 0; k < n; ++k) {
      S num = a.partial(k) - r.value_ * b.partial(k);
      if (!is_zero(num)) r.partials_[k] = num * inv;
    }
    return r;
  }

  Jet& operator/=(const Jet& b) { return *this = *this / b; }

  friend bool operator==(const Jet& a, const Jet& b) {
    if (!(a.value_ == b.value_)) return false;
    const std::size_t n = std::max(a.partials_.size(), b.partials_.size());
    for (std::size_t k = 0; k < n; ++k) {
      if (!(a.partial(k) == b.partial(k))) return false;
    }
    return true;
  }

 private:
  S value_{};
  std::vector<S> partials_;
};

template <typename S>
bool is_zero(const Jet<S>& a) {
  if (!is_zero(a.value())) return false;
  for (const auto& p : a.partials()) {
    if (!is_zero(p)) return false;
  }
  return true;
}

/// A jet is invertible exactly when its value is.
template <typename S>
bool is_unit(const Jet<S>& a) {
  return is_unit(a.value());
}

template <typename S>
const GaussianRational& base_value(const Jet<S>& a) {
  return base_value(a.value());
}

/// Seed helper: value a with unit partial at var_index among n_vars.
inline Jet<> jet_lift(const GaussianRational& a, std::size_t var_index, std::size_t n_vars) {
  return Jet<>::variable(a, var_index, n_vars);
}

/// Lifts a scalar of any level into the ring T (constants only).
template <typename T>
T lift(const GaussianRational& a) {
  return T(a);
}

}  // namespace orbitkit
