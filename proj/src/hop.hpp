#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aqs/error.hpp"
#include "aqs/protocol.hpp"
#include "aqs/transcript.hpp"

namespace aqs::detail {

struct QubitMessage {
  std::string label;
  QubitString* qubits;
};

/// Logs each message as sent, lets the adversary touch it, then passes the
/// hop's messages through the channel as one contiguous string.
void send_qubits(Transcript& t, std::string_view actor, std::string_view hop,
                 std::vector<QubitMessage> messages, const ChannelModel& channel,
                 const Adversary& adversary, RandomSource& rng);

void send_classical(Transcript& t, std::string_view actor, std::string_view hop,
                    std::string_view label, BitString& bits, const Adversary& adversary);

std::map<std::string, std::string> error_fields(const Error& e);

}  // namespace aqs::detail
