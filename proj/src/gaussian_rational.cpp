#include "orbitkit/gaussian_rational.hpp"

#include <ostream>
#include <sstream>

#include "orbitkit/error.hpp"

namespace orbitkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotNilpotent: return "NotNilpotent";
    case ErrorCode::kNotUnipotent: return "NotUnipotent";
    case ErrorCode::kSingularMatrix: return "SingularMatrix";
    case ErrorCode::kConstantLambda: return "ConstantLambda";
    case ErrorCode::kNotBlockSorted: return "NotBlockSorted";
    case ErrorCode::kOutsideBigCell: return "OutsideBigCell";
    case ErrorCode::kWrongSupport: return "WrongSupport";
    case ErrorCode::kOutsideChart: return "OutsideChart";
    case ErrorCode::kOutsideOverlap: return "OutsideOverlap";
    case ErrorCode::kNotTangent: return "NotTangent";
    case ErrorCode::kInvalidRepresentative: return "InvalidRepresentative";
    case ErrorCode::kInvalidWitness: return "InvalidWitness";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kConfigError: return "ConfigError";
  }
  return "Unknown";
}

namespace {

mpz_class parse_integer(const std::string& text) {
  mpz_class value;
  if (text.empty() || value.set_str(text, 10) != 0) {
    throw Error(ErrorCode::kParseError, "not a base-10 integer: '" + text + "'");
  }
  return value;
}

mpq_class checked_fraction(const std::string& num, const std::string& den) {
  mpz_class n = parse_integer(num);
  mpz_class d = parse_integer(den);
  if (sgn(d) <= 0) throw Error(ErrorCode::kParseError, "denominator must be positive: " + den);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) throw Error(ErrorCode::kParseError, "fraction not in lowest terms: " + num + "/" + den);
  return mpq_class(n, d);
}

void append_rational(std::ostringstream& os, const mpq_class& q) {
  os << q.get_num();
  if (q.get_den() != 1) os << '/' << q.get_den();
}

}  // namespace

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::from_parts(const std::string& re_num, const std::string& re_den,
                                              const std::string& im_num, const std::string& im_den) {
  return {checked_fraction(re_num, re_den), checked_fraction(im_num, im_den)};
}

GaussianRational GaussianRational::parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return {mpq_class(parse_integer(text)), 0};
  mpz_class n = parse_integer(text.substr(0, slash));
  mpz_class d = parse_integer(text.substr(slash + 1));
  if (sgn(d) == 0) throw Error(ErrorCode::kParseError, "zero denominator in '" + text + "'");
  return {mpq_class(n, d), 0};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  if (is_real()) return {1 / re_, 0};
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& b) {
  re_ += b.re_;
  if (sgn(b.im_) != 0) im_ += b.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& b) {
  re_ -= b.re_;
  if (sgn(b.im_) != 0) im_ -= b.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& b) {
  if (is_real() && b.is_real()) {
    re_ *= b.re_;
    return *this;
  }
  mpq_class re = re_ * b.re_ - im_ * b.im_;
  mpq_class im = re_ * b.im_ + im_ * b.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& b) {
  if (b.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero");
  if (is_real() && b.is_real()) {
    re_ /= b.re_;
    return *this;
  }
  return *this *= b.inverse();
}

std::string GaussianRational::to_string() const {
  std::ostringstream os;
  if (is_real()) {
    append_rational(os, re_);
    return os.str();
  }
  if (sgn(re_) != 0) {
    append_rational(os, re_);
    if (sgn(im_) > 0) os << '+';
  }
  append_rational(os, im_);
  os << 'i';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& a) { return os << a.to_string(); }

}  // namespace orbitkit
