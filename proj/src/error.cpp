#include "chaos01/error.hpp"

namespace chaos01 {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::InvalidC: return "InvalidC";
    case ErrorCode::ResonantC: return "ResonantC";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::NoValidFrequency: return "NoValidFrequency";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValueError: return "ValueError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_numerical_degeneracy(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooShort:
    case ErrorCode::ResonantC:
    case ErrorCode::ZeroVariance:
    case ErrorCode::NoValidFrequency:
    case ErrorCode::EmptyGrid:
      return true;
    default:
      return false;
  }
}

}  // namespace chaos01
