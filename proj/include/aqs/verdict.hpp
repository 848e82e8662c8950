#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "aqs/bits.hpp"
#include "aqs/transcript.hpp"

namespace aqs {

enum class VerdictKind {
  Accept,
  RejectByArbitrator,
  RejectByReceiver,
  AbortReceiverInvalid,
};

std::string_view to_string(VerdictKind kind);

/// Receiver-side outcome of one signing round. `message` holds the message
/// the receiver ended up with: the accepted message on Accept, the message
/// the arbitrator ruled invalid on AbortReceiverInvalid, empty otherwise.
struct Verdict {
  VerdictKind kind = VerdictKind::RejectByReceiver;
  BitString message;

  bool accepted() const noexcept { return kind == VerdictKind::Accept; }
};

struct RunResult {
  std::optional<Verdict> verdict;  // empty when the run failed with an error
  Transcript transcript;
  std::optional<std::string> failure;
};

}  // namespace aqs
