#pragma once

#include <string>
#include <string_view>

#include "aqs/config.hpp"
#include "aqs/payment.hpp"
#include "aqs/verdict.hpp"

namespace aqs {

/// Process exit codes, one per outcome class.
///
///   0   Accept / Committed / report produced / both parties bound
///   2   invalid configuration or usage
///   3   the run failed with a module error
///   10  RejectByArbitrator        20  RejectedSignature(payer)
///   11  RejectByReceiver          21  RejectedSignature(payee)
///   12  AbortReceiverInvalid      22  RejectedMismatch
///   13  dispute not fully bound   23  RejectedExpired
namespace exit_codes {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kFailure = 3;
inline constexpr int kRejectByArbitrator = 10;
inline constexpr int kRejectByReceiver = 11;
inline constexpr int kAbortReceiverInvalid = 12;
inline constexpr int kDisputeInconclusive = 13;
inline constexpr int kRejectedSignaturePayer = 20;
inline constexpr int kRejectedSignaturePayee = 21;
inline constexpr int kRejectedMismatch = 22;
inline constexpr int kRejectedExpired = 23;
}  // namespace exit_codes

int exit_code(VerdictKind kind);
int exit_code(payment::SettlementStatus status);

struct CommandResult {
  int exit_code = exit_codes::kOk;
  std::string outcome;     // verdict or settlement name
  std::string transcript;  // JSON lines
  std::string summary;     // human-readable
};

/// Commands: sign-recovery, sign-appendix, attack, efficiency, payment, dispute.
/// Throws InvalidConfig for an unknown command or a hop the command lacks.
CommandResult run_command(std::string_view command, const RunConfig& config);

}  // namespace aqs
