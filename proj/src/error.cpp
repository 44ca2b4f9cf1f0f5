#include "ghstab/error.hpp"

namespace ghstab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyCoefficients: return "EmptyCoefficients";
    case ErrorCode::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DegreeOrder: return "DegreeOrder";
    case ErrorCode::BadWindowDegree: return "BadWindowDegree";
    case ErrorCode::NonPositiveExponent: return "NonPositiveExponent";
    case ErrorCode::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::DegreeOverlap: return "DegreeOverlap";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::EnclosureTooWide: return "EnclosureTooWide";
    case ErrorCode::NotStableInput: return "NotStableInput";
    case ErrorCode::SearchBudgetExhausted: return "SearchBudgetExhausted";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::NonPositiveSeed: return "NonPositiveSeed";
    case ErrorCode::NotInW: return "NotInW";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::FixtureParse: return "FixtureParse";
    case ErrorCode::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

}  // namespace ghstab
