#include "fuzzy/error.hpp"

namespace fuzzy {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidGrade: return "InvalidGrade";
    case ErrorCode::InvalidCarrier: return "InvalidCarrier";
    case ErrorCode::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorCode::EmptyQuery: return "EmptyQuery";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::BrokenOrder: return "BrokenOrder";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::InvalidSpace: return "InvalidSpace";
    case ErrorCode::DimensionError: return "DimensionError";
    case ErrorCode::NotDominated: return "NotDominated";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::DegenerateBasis: return "DegenerateBasis";
    case ErrorCode::InvalidHandle: return "InvalidHandle";
    case ErrorCode::StabilizationOverflow: return "StabilizationOverflow";
    case ErrorCode::NotProjectionBand: return "NotProjectionBand";
    case ErrorCode::NotPositiveOperator: return "NotPositiveOperator";
    case ErrorCode::SpecError: return "SpecError";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::CertificateRejected: return "CertificateRejected";
  }
  return "Unknown";
}

}  // namespace fuzzy
