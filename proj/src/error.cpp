#include "robin/error.hpp"

namespace robin {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::PrecisionUnsupported: return "PrecisionUnsupported";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::LimitTooLarge: return "LimitTooLarge";
    case ErrorCode::InputTooLarge: return "InputTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DuplicateBase: return "DuplicateBase";
    case ErrorCode::ZeroExponent: return "ZeroExponent";
    case ErrorCode::EmptyFactorization: return "EmptyFactorization";
    case ErrorCode::RhsUndefined: return "RhsUndefined";
    case ErrorCode::CollidingBase: return "CollidingBase";
    case ErrorCode::NotAnIncrease: return "NotAnIncrease";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::IndeterminateBase: return "IndeterminateBase";
    case ErrorCode::BaseNotSatisfied: return "BaseNotSatisfied";
    case ErrorCode::InvalidRange: return "InvalidRange";
  }
  return "Unknown";
}

}  // namespace robin
