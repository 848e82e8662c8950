#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aqs {

enum class ErrorCode {
  LengthMismatch,
  DoubleMeasurement,
  PositionOutOfRange,
  InvalidParams,
  ExpiredKey,
  InvalidScenario,
  MalformedEvidence,
  MalformedTranscript,
  DivisionByZero,
  AlreadyRegistered,
  MalformedCheck,
  InsufficientFunds,
  UnknownAccount,
  InvalidConfig,
  Io,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; the code carries the taxonomy.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace aqs
