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

// Arbitrated signature with message recovery. The message travels only
// inside the masked, conjugate-coded signature; the receiver learns it from
// the arbitrator's reply.
namespace aqs::recovery {

struct Signature {
  QubitString s_a;  // n1 qubits
  BitString nonce;  // r_A, kept by the signer
};

struct ReceiverChallenge {
  QubitString y_b;   // n1 qubits
  BitString filler;  // F_B, n + m2 bits, kept by the receiver
  BitString nonce;   // r_B
};

struct ArbitratorResponse {
  QubitString s_a_replay;  // re-prepared from the arbitrator's measurement of s_a
  QubitString y_a;
  Bit mu_a = 0;
  Bit mu_b = 1;
};

/// The arbitrator refused the receiver (mu_b = 0) and aborted.
struct ArbitratorReject {
  Bit mu_a = 0;
};

using Arbitration = std::variant<ArbitratorResponse, ArbitratorReject>;

/// R_A = h1(K_A, r_A) xor (P || h2(P, r_A) || U_A);  s_a = M_{K_A}(r_A || R_A).
Signature sign(const BitString& message, KeyRecord& key_a, const IdentityString& signer,
               const ProtocolContext& ctx, RandomSource& rng);

/// R_B = h1(K_B, r_B) xor (F_B || U_B);  y_b = M_{K_B}(r_B || R_B).
ReceiverChallenge receiver_challenge(KeyRecord& key_b, const IdentityString& receiver,
                                     const ProtocolContext& ctx, RandomSource& rng);

/// Measures s_a and y_b, sets mu_a / mu_b and builds y_a. A failed mu_a
/// records an abort on key_a; a failed mu_b records one on key_b.
Arbitration arbitrate(QubitString s_a, QubitString y_b, KeyRecord& key_a, KeyRecord& key_b,
                      const Identities& ids, const ProtocolContext& ctx, RandomSource& rng);

/// Receiver's final check of y_a against its retained F_B.
Verdict receiver_verify(ArbitratorResponse& response, KeyRecord& key_b,
                        const IdentityString& arbitrator, const ReceiverChallenge& challenge,
                        const ProtocolContext& ctx, RandomSource& rng);

/// Measures a signature under the signer's key and checks the tag and
/// identity. Returns the recovered message when the signature is consistent.
std::optional<BitString> open_signature(QubitString s_a, const KeyRecord& key_a,
                                        const IdentityString& signer, const ProtocolContext& ctx,
                                        RandomSource& rng);

/// Drives signing and verification across the three hops.
RunResult run(const BitString& message, Parties& parties, const RunOptions& options,
              const ProtocolContext& ctx, std::uint64_t seed);

}  // namespace aqs::recovery
