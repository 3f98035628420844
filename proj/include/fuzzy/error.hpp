#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fuzzy {

// Every failure mode in the library maps to exactly one code. The CLI prints
// the code name verbatim in JSON mode, so the names are part of the interface.
enum class ErrorCode {
  ParseError,
  InvalidGrade,
  InvalidCarrier,
  CarrierTooLarge,
  EmptyQuery,
  UnknownElement,
  BrokenOrder,
  InvalidOrder,
  InvalidSpace,
  DimensionError,
  NotDominated,
  NotPositive,
  DegenerateBasis,
  InvalidHandle,
  StabilizationOverflow,
  NotProjectionBand,
  NotPositiveOperator,
  SpecError,
  NotMonotone,
  CertificateRejected,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace fuzzy
