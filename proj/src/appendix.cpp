#include "aqs/appendix.hpp"

#include "aqs/error.hpp"
#include "hop.hpp"

namespace aqs::appendix {

namespace {

void expect_length(const QubitString& q, std::size_t n, const char* what) {
  if (q.size() != n) {
    throw Error(ErrorCode::LengthMismatch, std::string(what) + " has " + std::to_string(q.size()) +
                                               " qubits, expected " + std::to_string(n));
  }
}

const BitString kMuOne{1};
const BitString kMuZero{0};

// r'' || U' == r' || U, with r'' || U' = h3(key, r', bound...) xor R'.
bool consistent(const BitString& measured, const BitString& expected_id, const BitString& h3_out,
                const ProtocolContext& ctx) {
  auto halves = split(measured, {ctx.params.l, ctx.params.m3});
  return xor_bits(h3_out, halves[1]) == concat({halves[0], expected_id});
}

}  // namespace

Signature sign(const BitString& message, KeyRecord& key_a, const IdentityString& signer,
               const ProtocolContext& ctx, RandomSource& rng) {
  const auto& p = ctx.params;
  if (message.empty()) throw Error(ErrorCode::LengthMismatch, "message must not be empty");
  key_a.use();
  if (key_a.key.size() != p.n2) throw Error(ErrorCode::LengthMismatch, "signer key must have n2 bits");
  auto r_a = random_bits(p.l, rng);
  auto masked = xor_bits(ctx.hash.h3({key_a.key, r_a, message}), concat({r_a, signer.bits()}));
  return {encode_conjugate(key_a.key, concat({r_a, masked})), message, std::move(r_a)};
}

ReceiverChallenge receiver_challenge(KeyRecord& key_b, const IdentityString& receiver,
                                     const ProtocolContext& ctx, RandomSource& rng) {
  const auto& p = ctx.params;
  key_b.use();
  if (key_b.key.size() != p.n2) throw Error(ErrorCode::LengthMismatch, "receiver key must have n2 bits");
  auto r_b = random_bits(p.l, rng);
  auto masked = xor_bits(ctx.hash.h3({key_b.key, r_b}), concat({r_b, receiver.bits()}));
  return {encode_conjugate(key_b.key, concat({r_b, masked})), std::move(r_b)};
}

SignatureCheck check_signature(QubitString signature, const BitString& message,
                               const KeyRecord& key, const IdentityString& id,
                               const ProtocolContext& ctx, RandomSource& rng) {
  expect_length(signature, ctx.params.n2, "signature");
  SignatureCheck out;
  out.measured = decode_conjugate(key.key, signature, rng);
  const auto nonce = split(out.measured, {ctx.params.l, ctx.params.m3})[0];
  out.valid = consistent(out.measured, id.bits(), ctx.hash.h3({key.key, nonce, message}), ctx);
  return out;
}

Arbitration arbitrate(QubitString s_a, QubitString y_b, const BitString& message,
                      KeyRecord& key_a, KeyRecord& key_b, const Identities& ids,
                      const ProtocolContext& ctx, RandomSource& rng) {
  const auto& p = ctx.params;
  expect_length(y_b, p.n2, "receiver string");
  key_a.require_usable();
  key_b.require_usable();

  auto sig = check_signature(std::move(s_a), message, key_a, ids.signer, ctx, rng);
  const Bit mu_a = sig.valid;

  auto measured_b = decode_conjugate(key_b.key, y_b, rng);
  const auto r_b = split(measured_b, {p.l, p.m3})[0];
  const Bit mu_b = consistent(measured_b, ids.receiver.bits(), ctx.hash.h3({key_b.key, r_b}), ctx);

  if (!mu_b) {
    key_b.record_abort();
    return ArbitratorReject{mu_a};
  }
  if (!mu_a) key_a.record_abort();

  auto r_a = random_bits(p.l, rng);
  const auto& mu = mu_a ? kMuOne : kMuZero;
  auto masked = xor_bits(ctx.hash.h3({key_b.key, r_a, message, mu}),
                         concat({r_a, ids.arbitrator.bits()}));

  ArbitratorResponse response;
  response.s_a_replay = encode_conjugate(key_a.key, sig.measured);
  response.y_a = encode_conjugate(key_b.key, concat({r_a, masked}));
  response.message = message;
  response.mu_a = mu_a;
  response.mu_b = mu_b;
  return response;
}

Verdict receiver_verify(ArbitratorResponse& response, KeyRecord& key_b,
                        const IdentityString& arbitrator, const ProtocolContext& ctx,
                        RandomSource& rng) {
  const auto& p = ctx.params;
  expect_length(response.y_a, p.n2, "arbitrator string");
  auto measured = decode_conjugate(key_b.key, response.y_a, rng);
  response.y_a.clear();
  const auto r_a = split(measured, {p.l, p.m3})[0];
  const auto& P = response.message;
  if (consistent(measured, arbitrator.bits(), ctx.hash.h3({key_b.key, r_a, P, kMuOne}), ctx)) {
    return {VerdictKind::Accept, P};
  }
  if (consistent(measured, arbitrator.bits(), ctx.hash.h3({key_b.key, r_a, P, kMuZero}), ctx)) {
    return {VerdictKind::AbortReceiverInvalid, P};
  }
  key_b.record_abort();
  return {VerdictKind::RejectByReceiver, {}};
}

namespace {

// Sends the signature-bearing qubit strings plus the message on one hop and
// returns the message as the far end reads it.
BitString send_with_message(Transcript& t, std::string_view actor, std::string_view hop,
                            std::vector<detail::QubitMessage> messages, const BitString& message,
                            const RunOptions& options, RandomSource& rng) {
  const auto& channel = options.channels.at(hop);
  if (options.transport == Transport::QuantumP) {
    auto carried = encode_rectilinear(message);
    messages.push_back({"P", &carried});
    detail::send_qubits(t, actor, hop, std::move(messages), channel, options.adversary, rng);
    return decode_rectilinear(carried, rng);
  }
  detail::send_qubits(t, actor, hop, std::move(messages), channel, options.adversary, rng);
  BitString carried = message;
  detail::send_classical(t, actor, hop, "P", carried, options.adversary);
  return carried;
}

}  // namespace

RunResult run(const BitString& message, Parties& parties, const RunOptions& options,
              const ProtocolContext& ctx, std::uint64_t seed) {
  RunResult result;
  auto& t = result.transcript;
  t = Transcript(options.transport == Transport::QuantumP ? "appendix-quantum" : "appendix", seed);
  t.set_signed_bits(message.size());
  const auto& ids = parties.ids();
  t.set_party("signer", ids.signer.bits());
  t.set_party("receiver", ids.receiver.bits());
  t.set_party("arbitrator", ids.arbitrator.bits());
  RandomSource rng(seed);

  try {
    auto signature = sign(message, parties.signer_key(), ids.signer, ctx, rng);
    QubitString s_a = std::move(signature.s_a);
    auto p_at_bob = send_with_message(t, "alice", kHopAliceBob, {{"s_a", &s_a}}, message,
                                      options, rng);

    auto challenge = receiver_challenge(parties.receiver_key(), ids.receiver, ctx, rng);
    QubitString y_b = challenge.y_b;
    auto p_at_arbitrator = send_with_message(t, "bob", kHopBobArbitrator,
                                             {{"s_a", &s_a}, {"y_b", &y_b}}, p_at_bob, options, rng);

    auto outcome = arbitrate(std::move(s_a), std::move(y_b), p_at_arbitrator,
                             parties.signer_key(), parties.receiver_key(), ids, ctx, rng);

    if (auto* reject = std::get_if<ArbitratorReject>(&outcome)) {
      t.note(EventKind::Measurement, "arbitrator", "check",
             {{"mu_a", std::to_string(reject->mu_a)}, {"mu_b", "0"}});
      t.note(EventKind::Notification, "arbitrator", "reject", {{"to", "bob"}});
      t.note(EventKind::Notification, "arbitrator", "confirm-reject", {{"to", "alice"}});
      result.verdict = Verdict{VerdictKind::RejectByArbitrator, {}};
      t.note(EventKind::Verdict, "arbitrator", std::string(to_string(result.verdict->kind)));
      return result;
    }

    auto& response = std::get<ArbitratorResponse>(outcome);
    t.note(EventKind::Measurement, "arbitrator", "check",
           {{"mu_a", std::to_string(response.mu_a)}, {"mu_b", std::to_string(response.mu_b)}});
    response.message = send_with_message(
        t, "arbitrator", kHopArbitratorBob,
        {{"s_a_replay", &response.s_a_replay}, {"y_a", &response.y_a}}, response.message,
        options, rng);

    t.note(EventKind::Notification, "bob", "evidence").payload_qubits = response.s_a_replay;

    auto verdict = receiver_verify(response, parties.receiver_key(), ids.arbitrator, ctx, rng);
    auto& e = t.note(EventKind::Verdict, "bob", std::string(to_string(verdict.kind)));
    if (!verdict.message.empty()) e.payload_bits = verdict.message;
    result.verdict = std::move(verdict);
  } catch (const Error& err) {
    t.note(EventKind::Failure, "driver", "error", detail::error_fields(err));
    result.failure = err.what();
  }
  return result;
}

}  // namespace aqs::appendix
