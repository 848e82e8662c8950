#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "aqs/bits.hpp"
#include "aqs/hash.hpp"
#include "aqs/keys.hpp"
#include "aqs/protocol.hpp"
#include "aqs/qubit.hpp"
#include "aqs/verdict.hpp"

// Arbitrated signature with appendix: the message P is public and travels
// next to an n2-qubit signature; h3 binds P to the signer's nonce.
namespace aqs::appendix {

struct Signature {
  QubitString s_a;  // n2 qubits
  BitString message;
  BitString nonce;
};

struct ReceiverChallenge {
  QubitString y_b;
  BitString nonce;
};

struct ArbitratorResponse {
  QubitString s_a_replay;
  QubitString y_a;
  BitString message;
  Bit mu_a = 0;
  Bit mu_b = 1;
};

struct ArbitratorReject {
  Bit mu_a = 0;
};

using Arbitration = std::variant<ArbitratorResponse, ArbitratorReject>;

/// R_A = h3(K_A, r_A, P) xor (r_A || U_A);  s_a = M_{K_A}(r_A || R_A).
Signature sign(const BitString& message, KeyRecord& key_a, const IdentityString& signer,
               const ProtocolContext& ctx, RandomSource& rng);

/// R_B = h3(K_B, r_B) xor (r_B || U_B).
ReceiverChallenge receiver_challenge(KeyRecord& key_b, const IdentityString& receiver,
                                     const ProtocolContext& ctx, RandomSource& rng);

struct SignatureCheck {
  bool valid = false;
  BitString measured;  // r' || R' as read under the key
};

/// Measures `signature` under `key` and checks r'' || U' == r' || U where
/// r'' || U' = h3(K, r', P) xor R'. Also used by the bank to verify checks.
SignatureCheck check_signature(QubitString signature, const BitString& message,
                               const KeyRecord& key, const IdentityString& id,
                               const ProtocolContext& ctx, RandomSource& rng);

Arbitration arbitrate(QubitString s_a, QubitString y_b, const BitString& message,
                      KeyRecord& key_a, KeyRecord& key_b, const Identities& ids,
                      const ProtocolContext& ctx, RandomSource& rng);

Verdict receiver_verify(ArbitratorResponse& response, KeyRecord& key_b,
                        const IdentityString& arbitrator, const ProtocolContext& ctx,
                        RandomSource& rng);

/// Drives the appendix scheme across the three hops. With QuantumP transport
/// the message is also sent as rectilinear qubits on every hop.
RunResult run(const BitString& message, Parties& parties, const RunOptions& options,
              const ProtocolContext& ctx, std::uint64_t seed);

}  // namespace aqs::appendix
