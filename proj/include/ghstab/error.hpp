#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ghstab {

enum class ErrorCode {
  EmptyCoefficients,
  ZeroLeadingCoefficient,
  ParseError,
  DegreeOrder,
  BadWindowDegree,
  NonPositiveExponent,
  NonPositiveParameter,
  DegreeTooSmall,
  DegreeOverlap,
  DegreeZero,
  NotPositive,
  NoConvergence,
  EnclosureTooWide,
  NotStableInput,
  SearchBudgetExhausted,
  BadDegree,
  NonPositiveSeed,
  NotInW,
  VerificationFailed,
  FixtureParse,
  BadConfig,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ghstab
