#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "aqs/keys.hpp"
#include "aqs/params.hpp"
#include "aqs/protocol.hpp"
#include "aqs/transcript.hpp"

namespace aqs {

enum class Scheme { Recovery, Appendix };

enum class Strategy {
  ForgeWithoutKey,
  ReplayOldSignature,
  SubstituteMessage,
  InterceptResendEavesdrop,
};

std::string_view to_string(Scheme s);
std::string_view to_string(Strategy s);
Scheme parse_scheme(std::string_view text);
/// "forge", "replay", "substitute-message", "intercept-resend".
Strategy parse_strategy(std::string_view text);

/// The attacker knows parameters and identities and controls one hop, but
/// never holds a shared key.
struct AttackScenario {
  Scheme scheme = Scheme::Recovery;
  Strategy strategy = Strategy::ForgeWithoutKey;
  std::size_t trials = 1000;
  ProtocolParams params = ProtocolParams::defaults();
  std::uint64_t seed = 0;
  Transport transport = Transport::ClassicalP;
  /// Hop the attacker works on. Empty picks the strategy's natural hop:
  /// alice-bob for forgery, replay and substitution, bob-arbitrator for eavesdropping.
  std::string hop;
  /// Eavesdropping only: qubits sampled for the per-qubit error rate.
  std::size_t qubits = 100000;
};

struct AttackReport {
  std::size_t trials = 0;
  std::size_t accepted = 0;  // runs ending in Accept
  std::size_t detected = 0;  // every other outcome
  double false_accept_rate = 0.0;
  // Eavesdropping only.
  std::optional<double> per_qubit_error_rate;
  std::size_t qubits_sampled = 0;
  std::size_t qubit_errors = 0;
  // Replay only: fresh and replayed signatures of the same message that differ.
  std::optional<std::size_t> distinguishable;
};

/// Throws InvalidScenario for zero trials or a strategy the scheme cannot host.
AttackReport run_attack(const AttackScenario& scenario);

enum class Binding { Bound, Inconclusive };

std::string_view to_string(Binding b);

struct Ruling {
  Binding signer = Binding::Inconclusive;
  Binding receiver = Binding::Inconclusive;

  bool inconclusive() const noexcept {
    return signer == Binding::Inconclusive && receiver == Binding::Inconclusive;
  }
};

/// Arbitrator's ruling from a run transcript. The signer is bound when the
/// receiver's stored, unmeasured copy of the signature opens under K_A to the
/// disputed message; the receiver is bound when the transcript shows it
/// submitted the signature for arbitration. Throws MalformedEvidence for an
/// empty transcript or keys that do not belong to the transcript's parties.
Ruling resolve_dispute(const Transcript& evidence, const KeyRecord& key_a, const KeyRecord& key_b,
                       const ProtocolParams& params);

}  // namespace aqs
