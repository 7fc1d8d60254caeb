#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitkit {

enum class ErrorCode {
  kDivisionByZero,
  kIndexOutOfRange,
  kDimensionMismatch,
  kNotNilpotent,
  kNotUnipotent,
  kSingularMatrix,
  kConstantLambda,
  kNotBlockSorted,
  kOutsideBigCell,
  kWrongSupport,
  kOutsideChart,
  kOutsideOverlap,
  kNotTangent,
  kInvalidRepresentative,
  kInvalidWitness,
  kParseError,
  kConfigError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// message adds context for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace orbitkit
