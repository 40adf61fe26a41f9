#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace entpot {

enum class ErrorCode {
  NotHermitian,
  WrongDimension,
  NotAState,
  SupportViolation,
  SingularState,
  OutOfDomain,
  NonPhysicalSpectrum,
  NotConverged,
  NotTracePreserving,
  RootNotBracketed,
  UnsupportedPair,
  ContainmentViolation,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::NotAState: return "NotAState";
    case ErrorCode::SupportViolation: return "SupportViolation";
    case ErrorCode::SingularState: return "SingularState";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NonPhysicalSpectrum: return "NonPhysicalSpectrum";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::NotTracePreserving: return "NotTracePreserving";
    case ErrorCode::RootNotBracketed: return "RootNotBracketed";
    case ErrorCode::UnsupportedPair: return "UnsupportedPair";
    case ErrorCode::ContainmentViolation: return "ContainmentViolation";
  }
  return "Unknown";
}

}  // namespace entpot
