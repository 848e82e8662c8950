#include "aqs/protocol.hpp"

#include "aqs/error.hpp"
#include "aqs/verdict.hpp"

namespace aqs {

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Accept: return "Accept";
    case VerdictKind::RejectByArbitrator: return "RejectByArbitrator";
    case VerdictKind::RejectByReceiver: return "RejectByReceiver";
    case VerdictKind::AbortReceiverInvalid: return "AbortReceiverInvalid";
  }
  return "RejectByReceiver";
}

Identities Identities::defaults(std::size_t k) {
  return {IdentityString::from_name("alice", k), IdentityString::from_name("bob", k),
          IdentityString::from_name("arbitrator", k)};
}

Parties Parties::provision(const Identities& ids, std::size_t key_length, std::uint64_t seed,
                           std::size_t xi_max) {
  Parties p;
  p.ids_ = ids;
  RandomSource rng(seed);
  p.keys_.share_key(ids.signer, ids.arbitrator, key_length, rng, xi_max);
  p.keys_.share_key(ids.receiver, ids.arbitrator, key_length, rng, xi_max);
  return p;
}

ChannelModel& HopChannels::at(std::string_view hop) {
  if (hop == kHopAliceBob) return alice_bob;
  if (hop == kHopBobArbitrator) return bob_arbitrator;
  if (hop == kHopArbitratorBob) return arbitrator_bob;
  throw Error(ErrorCode::InvalidConfig, "unknown hop '" + std::string(hop) + "'");
}

const ChannelModel& HopChannels::at(std::string_view hop) const {
  return const_cast<HopChannels*>(this)->at(hop);
}

std::string_view to_string(Transport t) {
  return t == Transport::ClassicalP ? "classical" : "quantum";
}

Transport parse_transport(std::string_view text) {
  if (text == "classical") return Transport::ClassicalP;
  if (text == "quantum") return Transport::QuantumP;
  throw Error(ErrorCode::InvalidConfig,
              "transport must be 'classical' or 'quantum', got '" + std::string(text) + "'");
}

}  // namespace aqs
