#include "aqs/error.hpp"

namespace aqs {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DoubleMeasurement: return "DoubleMeasurement";
    case ErrorCode::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::ExpiredKey: return "ExpiredKey";
    case ErrorCode::InvalidScenario: return "InvalidScenario";
    case ErrorCode::MalformedEvidence: return "MalformedEvidence";
    case ErrorCode::MalformedTranscript: return "MalformedTranscript";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::AlreadyRegistered: return "AlreadyRegistered";
    case ErrorCode::MalformedCheck: return "MalformedCheck";
    case ErrorCode::InsufficientFunds: return "InsufficientFunds";
    case ErrorCode::UnknownAccount: return "UnknownAccount";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace aqs
