#include "aqs/attacks.hpp"

#include "aqs/appendix.hpp"
#include "aqs/error.hpp"
#include "aqs/hash.hpp"
#include "aqs/recovery.hpp"

namespace aqs {

std::string_view to_string(Scheme s) { return s == Scheme::Recovery ? "recovery" : "appendix"; }

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::ForgeWithoutKey: return "forge";
    case Strategy::ReplayOldSignature: return "replay";
    case Strategy::SubstituteMessage: return "substitute-message";
    case Strategy::InterceptResendEavesdrop: return "intercept-resend";
  }
  return "forge";
}

Scheme parse_scheme(std::string_view text) {
  if (text == "recovery") return Scheme::Recovery;
  if (text == "appendix") return Scheme::Appendix;
  throw Error(ErrorCode::InvalidConfig,
              "scheme must be 'recovery' or 'appendix', got '" + std::string(text) + "'");
}

Strategy parse_strategy(std::string_view text) {
  for (auto s : {Strategy::ForgeWithoutKey, Strategy::ReplayOldSignature,
                 Strategy::SubstituteMessage, Strategy::InterceptResendEavesdrop}) {
    if (to_string(s) == text) return s;
  }
  throw Error(ErrorCode::InvalidConfig, "unknown attack strategy '" + std::string(text) + "'");
}

std::string_view to_string(Binding b) { return b == Binding::Bound ? "bound" : "inconclusive"; }

namespace {

std::size_t key_length(Scheme scheme, const ProtocolParams& p) {
  return scheme == Scheme::Recovery ? p.n1 : p.n2;
}

RunResult run_scheme(Scheme scheme, const BitString& message, Parties& parties,
                     const RunOptions& options, const ProtocolContext& ctx, std::uint64_t seed) {
  return scheme == Scheme::Recovery ? recovery::run(message, parties, options, ctx, seed)
                                    : appendix::run(message, parties, options, ctx, seed);
}

// Replaces the classical or qubit-borne message on `hop` with `replacement`.
void swap_message(Adversary& adv, std::string hop, const BitString& replacement) {
  adv.on_classical = [hop, replacement](std::string_view h, std::string_view label,
                                        BitString& bits) {
    if (h == hop && label == "P") bits = replacement;
  };
  auto previous = adv.on_qubits;
  adv.on_qubits = [hop, replacement, previous](std::string_view h, std::string_view label,
                                               QubitString& q) {
    if (previous) previous(h, label, q);
    if (h == hop && label == "P") q = encode_rectilinear(replacement);
  };
}

struct Trial {
  std::uint64_t seed;
  Parties parties;
  BitString message;
};

Trial fresh_trial(const AttackScenario& s, std::size_t index) {
  const auto seed = derive_seed(s.seed, index);
  auto parties = Parties::provision(Identities::defaults(s.params.k),
                                    key_length(s.scheme, s.params), derive_seed(seed, 1));
  RandomSource rng(derive_seed(seed, 2));
  return {seed, std::move(parties), random_bits(s.params.n, rng)};
}

void count(AttackReport& report, const RunResult& result) {
  if (result.verdict && result.verdict->accepted()) {
    ++report.accepted;
  } else {
    ++report.detected;
  }
}

void forge(const AttackScenario& s, const ProtocolContext& ctx, const std::string& hop,
           AttackReport& report) {
  for (std::size_t i = 0; i < s.trials; ++i) {
    auto trial = fresh_trial(s, i);
    RandomSource attacker(derive_seed(trial.seed, 3));
    // The attacker signs a message of his choosing under a guessed key.
    KeyRecord guessed{trial.parties.ids().signer,
                      random_bits(key_length(s.scheme, s.params), attacker)};
    const auto forged_message = random_bits(s.params.n, attacker);
    QubitString forged =
        s.scheme == Scheme::Recovery
            ? recovery::sign(forged_message, guessed, trial.parties.ids().signer, ctx, attacker).s_a
            : appendix::sign(forged_message, guessed, trial.parties.ids().signer, ctx, attacker).s_a;

    RunOptions options;
    options.transport = s.transport;
    options.adversary.on_qubits = [&](std::string_view h, std::string_view label, QubitString& q) {
      if (h == hop && label == "s_a") q = forged;
    };
    if (s.scheme == Scheme::Appendix) swap_message(options.adversary, hop, forged_message);
    count(report, run_scheme(s.scheme, trial.message, trial.parties, options, ctx, trial.seed));
  }
}

void substitute(const AttackScenario& s, const ProtocolContext& ctx, const std::string& hop,
                AttackReport& report) {
  if (s.scheme != Scheme::Appendix) {
    throw Error(ErrorCode::InvalidScenario,
                "message substitution needs the appendix scheme; the recovery scheme never "
                "sends the message in the clear");
  }
  for (std::size_t i = 0; i < s.trials; ++i) {
    auto trial = fresh_trial(s, i);
    RandomSource attacker(derive_seed(trial.seed, 3));
    auto other = random_bits(trial.message.size(), attacker);
    if (other == trial.message) other.flip(0);
    RunOptions options;
    options.transport = s.transport;
    swap_message(options.adversary, hop, other);
    count(report, run_scheme(s.scheme, trial.message, trial.parties, options, ctx, trial.seed));
  }
}

void replay(const AttackScenario& s, const ProtocolContext& ctx, const std::string& hop,
            AttackReport& report) {
  // One key pair for the whole experiment: the signer reuses K_A with fresh nonces.
  auto parties = Parties::provision(Identities::defaults(s.params.k),
                                    key_length(s.scheme, s.params), derive_seed(s.seed, 0));
  RandomSource msg_rng(derive_seed(s.seed, 1));
  const auto message = random_bits(s.params.n, msg_rng);
  std::size_t distinguishable = 0;
  for (std::size_t i = 0; i < s.trials; ++i) {
    const auto seed = derive_seed(s.seed, 2 + 2 * i);
    QubitString recorded;
    RunOptions first;
    first.transport = s.transport;
    first.adversary.on_qubits = [&](std::string_view h, std::string_view label, QubitString& q) {
      if (h == hop && label == "s_a") recorded = q;
    };
    auto original = run_scheme(s.scheme, message, parties, first, ctx, seed);
    if (!original.verdict || !original.verdict->accepted()) {
      ++report.detected;
      continue;
    }

    QubitString fresh;
    RunOptions second;
    second.transport = s.transport;
    second.adversary.on_qubits = [&](std::string_view h, std::string_view label, QubitString& q) {
      if (h == hop && label == "s_a") {
        fresh = q;
        q = recorded;
      }
    };
    auto replayed = run_scheme(s.scheme, message, parties, second, ctx, derive_seed(s.seed, 3 + 2 * i));
    count(report, replayed);
    bool differs = fresh.size() != recorded.size();
    for (std::size_t j = 0; !differs && j < fresh.size(); ++j) {
      differs = !fresh[j].same_state(recorded[j]);
    }
    distinguishable += differs;
  }
  report.distinguishable = distinguishable;
}

void eavesdrop(const AttackScenario& s, const ProtocolContext& ctx, const std::string& hop,
               AttackReport& report) {
  for (std::size_t i = 0; i < s.trials; ++i) {
    auto trial = fresh_trial(s, i);
    RunOptions options;
    options.transport = s.transport;
    options.channels.at(hop) = ChannelModel::intercept_resend();
    count(report, run_scheme(s.scheme, trial.message, trial.parties, options, ctx, trial.seed));
  }

  // Disturbance statistics: prepare under a secret key, intercept-resend,
  // then measure in the legitimate (key-selected) basis.
  RandomSource rng(derive_seed(s.seed, ~std::uint64_t{0}));
  const std::size_t chunk = key_length(s.scheme, s.params);
  while (report.qubits_sampled < s.qubits) {
    const auto len = std::min(chunk, s.qubits - report.qubits_sampled);
    auto key = random_bits(len, rng);
    auto data = random_bits(len, rng);
    auto received = transmit(encode_conjugate(key, data), ChannelModel::intercept_resend(), rng);
    report.qubit_errors += hamming_distance(decode_conjugate(key, received, rng), data);
    report.qubits_sampled += len;
  }
  report.per_qubit_error_rate =
      report.qubits_sampled ? static_cast<double>(report.qubit_errors) / report.qubits_sampled : 0.0;
}

}  // namespace

AttackReport run_attack(const AttackScenario& s) {
  if (s.trials == 0) throw Error(ErrorCode::InvalidScenario, "an attack needs at least one trial");
  ProtocolContext ctx(s.params);
  std::string hop = s.hop;
  if (hop.empty()) {
    hop = s.strategy == Strategy::InterceptResendEavesdrop ? kHopBobArbitrator : kHopAliceBob;
  }
  try {
    (void)HopChannels{}.at(hop);
  } catch (const Error&) {
    throw Error(ErrorCode::InvalidScenario, "unknown hop '" + hop + "'");
  }

  AttackReport report;
  report.trials = s.trials;
  switch (s.strategy) {
    case Strategy::ForgeWithoutKey: forge(s, ctx, hop, report); break;
    case Strategy::ReplayOldSignature: replay(s, ctx, hop, report); break;
    case Strategy::SubstituteMessage: substitute(s, ctx, hop, report); break;
    case Strategy::InterceptResendEavesdrop: eavesdrop(s, ctx, hop, report); break;
  }
  report.false_accept_rate = static_cast<double>(report.accepted) / report.trials;
  return report;
}

Ruling resolve_dispute(const Transcript& evidence, const KeyRecord& key_a, const KeyRecord& key_b,
                       const ProtocolParams& params) {
  if (evidence.empty()) throw Error(ErrorCode::MalformedEvidence, "empty transcript");
  const bool recovery_scheme = evidence.scheme() == "recovery";
  if (!recovery_scheme && !evidence.scheme().starts_with("appendix")) {
    throw Error(ErrorCode::MalformedEvidence, "transcript is not a signature run");
  }
  const auto& parties = evidence.parties();
  auto party = [&](const char* role) {
    auto it = parties.find(role);
    if (it == parties.end()) {
      throw Error(ErrorCode::MalformedEvidence, std::string("transcript names no ") + role);
    }
    return it->second;
  };
  if (party("signer") != key_a.party_id.bits().to_string() ||
      party("receiver") != key_b.party_id.bits().to_string()) {
    throw Error(ErrorCode::MalformedEvidence, "keys do not belong to the transcript's parties");
  }

  Ruling ruling;
  const QubitString* stored = nullptr;
  const BitString* disputed = nullptr;
  for (const auto& e : evidence.events()) {
    if (e.kind == EventKind::QubitSend && e.actor == "bob" && e.hop == kHopBobArbitrator &&
        e.label == "s_a") {
      ruling.receiver = Binding::Bound;
    }
    if (e.kind == EventKind::Notification && e.actor == "bob" && e.label == "evidence" &&
        e.payload_qubits) {
      stored = &*e.payload_qubits;
    }
    if (e.kind == EventKind::Verdict && e.actor == "bob" && e.payload_bits) {
      disputed = &*e.payload_bits;
    }
  }
  if (!stored || !disputed) return ruling;

  ProtocolContext ctx(params);
  RandomSource rng(evidence.seed());
  bool opens = false;
  if (recovery_scheme) {
    auto opened = recovery::open_signature(*stored, key_a, key_a.party_id, ctx, rng);
    opens = opened && *opened == *disputed;
  } else {
    opens = appendix::check_signature(*stored, *disputed, key_a, key_a.party_id, ctx, rng).valid;
  }
  if (opens) ruling.signer = Binding::Bound;
  return ruling;
}

}  // namespace aqs
