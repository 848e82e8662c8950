#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "aqs/bits.hpp"
#include "aqs/keys.hpp"
#include "aqs/params.hpp"
#include "aqs/qubit.hpp"

namespace aqs {

/// U_A, U_B and U_a.
struct Identities {
  IdentityString signer;
  IdentityString receiver;
  IdentityString arbitrator;

  static Identities defaults(std::size_t k);
};

/// Identities plus the arbitrator's key store holding K_A and K_B.
class Parties {
 public:
  static Parties provision(const Identities& ids, std::size_t key_length, std::uint64_t seed,
                           std::size_t xi_max = kDefaultXiMax);

  const Identities& ids() const noexcept { return ids_; }
  KeyRecord& signer_key() { return keys_.at(ids_.signer, ids_.arbitrator); }
  KeyRecord& receiver_key() { return keys_.at(ids_.receiver, ids_.arbitrator); }
  KeyStore& keys() noexcept { return keys_; }

 private:
  Identities ids_;
  KeyStore keys_;
};

inline constexpr std::string_view kHopAliceBob = "alice-bob";
inline constexpr std::string_view kHopBobArbitrator = "bob-arbitrator";
inline constexpr std::string_view kHopArbitratorBob = "arbitrator-bob";

struct HopChannels {
  ChannelModel alice_bob;
  ChannelModel bob_arbitrator;
  ChannelModel arbitrator_bob;

  static constexpr std::array<std::string_view, 3> kHops{kHopAliceBob, kHopBobArbitrator,
                                                         kHopArbitratorBob};

  /// Throws InvalidConfig for a hop name that does not exist.
  ChannelModel& at(std::string_view hop);
  const ChannelModel& at(std::string_view hop) const;
};

/// An active attacker sitting on the hops. Hooks run on each message before
/// the hop's channel model is applied; unset hooks leave traffic untouched.
struct Adversary {
  std::function<void(std::string_view hop, std::string_view label, QubitString&)> on_qubits;
  std::function<void(std::string_view hop, std::string_view label, BitString&)> on_classical;
};

enum class Transport { ClassicalP, QuantumP };

std::string_view to_string(Transport t);
Transport parse_transport(std::string_view text);

struct RunOptions {
  HopChannels channels;
  Adversary adversary;
  Transport transport = Transport::ClassicalP;  // appendix scheme only
};

}  // namespace aqs
