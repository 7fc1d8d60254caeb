#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace orbitkit {

/// An element of Q(i): re + im*i with arbitrary-precision rational parts.
///
/// Both parts are kept canonical (positive denominator, lowest terms), so
/// equality is structural. Instances are immutable from the outside; all
/// arithmetic returns new values.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  /// Parses base-10 integers; throws ParseError unless den > 0 and
  /// gcd(num, den) = 1 for both parts.
  static GaussianRational from_parts(const std::string& re_num, const std::string& re_den,
                                     const std::string& im_num, const std::string& im_den);
  /// Accepts "p", "p/q", "a+bi"-free forms: a plain rational string.
  static GaussianRational parse_rational(const std::string& text);
  static GaussianRational i() { return {0, 1}; }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |a|^2 = re^2 + im^2.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  /// Throws DivisionByZero for zero.
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& b);
  GaussianRational& operator-=(const GaussianRational& b);
  GaussianRational& operator*=(const GaussianRational& b);
  GaussianRational& operator/=(const GaussianRational& b);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "3/2", "-1/4i", "1+2i", "1/2-3/5i".
  std::string to_string() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& a);

// Scalar protocol shared with Jet so that matrix code is generic.
inline bool is_zero(const GaussianRational& a) { return a.is_zero(); }
inline bool is_unit(const GaussianRational& a) { return !a.is_zero(); }
inline const GaussianRational& base_value(const GaussianRational& a) { return a; }

using Q = GaussianRational;

}  // namespace orbitkit
