#include "aqs/commands.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

#include "aqs/appendix.hpp"
#include "aqs/attacks.hpp"
#include "aqs/efficiency.hpp"
#include "aqs/error.hpp"
#include "aqs/recovery.hpp"

namespace aqs {

int exit_code(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Accept: return exit_codes::kOk;
    case VerdictKind::RejectByArbitrator: return exit_codes::kRejectByArbitrator;
    case VerdictKind::RejectByReceiver: return exit_codes::kRejectByReceiver;
    case VerdictKind::AbortReceiverInvalid: return exit_codes::kAbortReceiverInvalid;
  }
  return exit_codes::kFailure;
}

int exit_code(payment::SettlementStatus status) {
  using payment::SettlementStatus;
  switch (status) {
    case SettlementStatus::Committed: return exit_codes::kOk;
    case SettlementStatus::RejectedSignaturePayer: return exit_codes::kRejectedSignaturePayer;
    case SettlementStatus::RejectedSignaturePayee: return exit_codes::kRejectedSignaturePayee;
    case SettlementStatus::RejectedMismatch: return exit_codes::kRejectedMismatch;
    case SettlementStatus::RejectedExpired: return exit_codes::kRejectedExpired;
  }
  return exit_codes::kFailure;
}

namespace {

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

void require_hops(const RunConfig& c, std::initializer_list<std::string_view> hops,
                  std::string_view command) {
  for (const auto& [hop, model] : c.channels) {
    bool known = false;
    for (auto h : hops) known = known || h == hop;
    if (!known) {
      throw Error(ErrorCode::InvalidConfig,
                  "channel." + hop + ": hop does not exist for " + std::string(command));
    }
  }
}

RunOptions signature_options(const RunConfig& c) {
  RunOptions options;
  options.transport = c.transport;
  for (const auto& [hop, model] : c.channels) options.channels.at(hop) = model;
  return options;
}

std::string params_line(const ProtocolParams& p) {
  std::ostringstream out;
  out << "params: n=" << p.n << " l=" << p.l << " k=" << p.k << " m1=" << p.m1 << " m2=" << p.m2
      << " m3=" << p.m3 << " n1=" << p.n1 << " n2=" << p.n2 << '\n';
  return out.str();
}

std::string tally_line(const Transcript& t) {
  try {
    const auto counts = tally(t);
    const auto e = eta(counts);
    return "transmitted: B_s=" + std::to_string(counts.signed_bits) +
           " Q_t=" + std::to_string(counts.qubits) + " B_t=" + std::to_string(counts.classical_bits) +
           " eta=" + e.to_string() + " (" + e.percent() + ")\n";
  } catch (const Error&) {
    return {};
  }
}

struct SignatureSetup {
  Parties parties;
  BitString message;
};

SignatureSetup signature_setup(const RunConfig& c, Scheme scheme) {
  const auto key_len = scheme == Scheme::Recovery ? c.params.n1 : c.params.n2;
  auto parties = Parties::provision(Identities::defaults(c.params.k), key_len,
                                    derive_seed(c.seed, 1), c.xi_max);
  BitString message;
  if (c.message) {
    message = *c.message;
  } else {
    RandomSource rng(derive_seed(c.seed, 2));
    message = random_bits(c.params.n, rng);
  }
  return {std::move(parties), std::move(message)};
}

RunResult run_signature(Scheme scheme, const BitString& message, Parties& parties,
                        const RunOptions& options, const RunConfig& c) {
  ProtocolContext ctx(c.params);
  return scheme == Scheme::Recovery ? recovery::run(message, parties, options, ctx, c.seed)
                                    : appendix::run(message, parties, options, ctx, c.seed);
}

CommandResult finish_signature(const RunResult& r, const RunConfig& c, Scheme scheme) {
  CommandResult out;
  out.transcript = r.transcript.to_jsonl(c.debug);
  std::ostringstream s;
  s << "scheme: " << to_string(scheme);
  if (scheme == Scheme::Appendix) s << " (" << to_string(c.transport) << " message transport)";
  s << '\n' << params_line(c.params);
  if (r.verdict) {
    out.outcome = std::string(to_string(r.verdict->kind));
    out.exit_code = exit_code(r.verdict->kind);
    s << "verdict: " << out.outcome << '\n';
    if (!r.verdict->message.empty()) s << "message: " << r.verdict->message.to_string() << '\n';
    s << tally_line(r.transcript);
  } else {
    out.outcome = "Failure";
    out.exit_code = exit_codes::kFailure;
    s << "failure: " << r.failure.value_or("unknown") << '\n';
  }
  out.summary = s.str();
  return out;
}

CommandResult sign_command(const RunConfig& c, Scheme scheme, std::string_view name) {
  require_hops(c, {kHopAliceBob, kHopBobArbitrator, kHopArbitratorBob}, name);
  auto setup = signature_setup(c, scheme);
  auto result = run_signature(scheme, setup.message, setup.parties, signature_options(c), c);
  return finish_signature(result, c, scheme);
}

CommandResult attack_command(const RunConfig& c) {
  require_hops(c, {}, "attack");
  AttackScenario scenario;
  scenario.scheme = c.scheme;
  scenario.strategy = c.strategy;
  scenario.trials = c.trials;
  scenario.params = c.params;
  scenario.seed = c.seed;
  scenario.transport = c.transport;
  scenario.hop = c.hop;
  scenario.qubits = c.qubits;
  const auto report = run_attack(scenario);

  std::map<std::string, std::string> fields{
      {"strategy", std::string(to_string(c.strategy))},
      {"trials", std::to_string(report.trials)},
      {"accepted", std::to_string(report.accepted)},
      {"detected", std::to_string(report.detected)},
      {"false_accept_rate", fixed(report.false_accept_rate)},
  };
  std::ostringstream s;
  s << "attack: " << to_string(c.strategy) << " against the " << to_string(c.scheme)
    << " scheme\n"
    << params_line(c.params) << "trials:            " << report.trials << '\n'
    << "accepted:          " << report.accepted << '\n'
    << "detected:          " << report.detected << '\n'
    << "false accept rate: " << fixed(report.false_accept_rate) << '\n';
  if (report.per_qubit_error_rate) {
    fields["per_qubit_error_rate"] = fixed(*report.per_qubit_error_rate);
    fields["qubits_sampled"] = std::to_string(report.qubits_sampled);
    fields["qubit_errors"] = std::to_string(report.qubit_errors);
    s << "qubits sampled:    " << report.qubits_sampled << '\n'
      << "per-qubit error rate: " << fixed(*report.per_qubit_error_rate, 4) << '\n';
  }
  if (report.distinguishable) {
    fields["distinguishable"] = std::to_string(*report.distinguishable);
    s << "distinguishable:   " << *report.distinguishable
      << " (fresh vs replayed signature of the same message)\n"
      << "note: replayed signatures verify; signed payloads carry no sequence number\n";
  }
  Transcript t("attack-" + std::string(to_string(c.scheme)), c.seed);
  t.set_signed_bits(c.params.n);
  t.note(EventKind::Verdict, "harness", "report", std::move(fields));

  CommandResult out;
  out.outcome = "Report";
  out.transcript = t.to_jsonl(c.debug);
  out.summary = s.str();
  return out;
}

CommandResult efficiency_command(const RunConfig& c) {
  require_hops(c, {}, "efficiency");
  auto m = measure_recovery_efficiency(c.l_ratio, c.m1_ratio, c.seed);
  auto table = comparison_table(c.seed);

  CommandResult out;
  out.outcome = m.efficiency.percent();
  out.transcript = m.transcript.to_jsonl(c.debug);
  if (c.json) {
    nlohmann::ordered_json j;
    j["l_ratio"] = c.l_ratio.to_string();
    j["m1_ratio"] = c.m1_ratio.to_string();
    j["B_s"] = m.counts.signed_bits;
    j["Q_t"] = m.counts.qubits;
    j["B_t"] = m.counts.classical_bits;
    j["eta"] = m.efficiency.to_string();
    j["percent"] = m.efficiency.percent();
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : table) {
      rows.push_back({{"scheme", r.scheme},
                      {"eta", r.efficiency.to_string()},
                      {"percent", r.efficiency.percent()},
                      {"published", r.published}});
    }
    j["comparison"] = rows;
    out.summary = j.dump() + "\n";
    return out;
  }
  std::ostringstream s;
  s << "ratios: l=" << c.l_ratio.to_string() << "n m1=" << c.m1_ratio.to_string() << "n\n"
    << params_line(m.params) << "B_s=" << m.counts.signed_bits << " Q_t=" << m.counts.qubits
    << " B_t=" << m.counts.classical_bits << '\n'
    << "efficiency: " << m.efficiency.to_string() << " = " << m.efficiency.percent() << "\n\n";
  std::size_t width = 0;
  for (const auto& r : table) width = std::max(width, r.scheme.size());
  for (const auto& r : table) {
    s << r.scheme << std::string(width - r.scheme.size() + 2, ' ') << r.efficiency.percent()
      << (r.published ? "" : "  (measured)") << '\n';
  }
  out.summary = s.str();
  return out;
}

CommandResult payment_command(const RunConfig& c) {
  require_hops(c, {payment::kHopPayerPayee, payment::kHopPayeeBank}, "payment");
  payment::PaymentScenario s;
  s.params = c.params;
  s.transport = c.transport;
  if (auto it = c.channels.find(std::string(payment::kHopPayerPayee)); it != c.channels.end()) {
    s.payer_payee = it->second;
  }
  if (auto it = c.channels.find(std::string(payment::kHopPayeeBank)); it != c.channels.end()) {
    s.payee_bank = it->second;
  }
  s.amount = c.amount;
  s.payee_amount = c.payee_amount;
  s.opening_balance = c.balance;
  s.replay = c.replay;
  s.ledger_path = c.ledger;
  s.strict_expiry = c.strict_expiry;
  s.today = c.today;
  auto outcome = payment::run_payment_scenario(s, c.seed);

  CommandResult out;
  out.transcript = outcome.transcript.to_jsonl(c.debug);
  std::ostringstream sum;
  sum << "payment: amount p4=" << c.amount << " p10=" << c.payee_amount << " ("
      << to_string(c.transport) << " check transport)\n";
  if (!outcome.result) {
    out.outcome = "Failure";
    out.exit_code = exit_codes::kFailure;
    sum << "failure: " << outcome.failure.value_or("unknown") << '\n';
    out.summary = sum.str();
    return out;
  }
  out.outcome = std::string(to_string(outcome.result->status));
  out.exit_code = exit_code(outcome.result->status);
  sum << "settlement: " << out.outcome << '\n';
  if (outcome.replay_result) {
    sum << "replayed package: " << to_string(outcome.replay_result->status) << '\n';
    if (outcome.replay_result->committed()) {
      sum << "warning: the same check settled twice; checks carry no serial number\n";
    }
  }
  if (outcome.failure) sum << "failure: " << *outcome.failure << '\n';
  sum << "ledger total: " << outcome.ledger.total() << '\n';
  for (const auto& [account, balance] : outcome.ledger.accounts()) {
    sum << "  account " << account << ": " << balance << '\n';
  }
  out.summary = sum.str();
  return out;
}

CommandResult dispute_command(const RunConfig& c) {
  require_hops(c, {kHopAliceBob, kHopBobArbitrator, kHopArbitratorBob}, "dispute");
  auto setup = signature_setup(c, c.scheme);
  auto options = signature_options(c);
  ProtocolContext ctx(c.params);

  if (c.forge) {
    RandomSource attacker(derive_seed(c.seed, 3));
    const auto key_len = c.scheme == Scheme::Recovery ? c.params.n1 : c.params.n2;
    KeyRecord guessed{setup.parties.ids().signer, random_bits(key_len, attacker)};
    const auto fake = random_bits(c.params.n, attacker);
    auto forged = c.scheme == Scheme::Recovery
                      ? recovery::sign(fake, guessed, guessed.party_id, ctx, attacker).s_a
                      : appendix::sign(fake, guessed, guessed.party_id, ctx, attacker).s_a;
    options.adversary.on_qubits = [forged, fake](std::string_view hop, std::string_view label,
                                                 QubitString& q) {
      if (hop != kHopAliceBob) return;
      if (label == "s_a") q = forged;
      if (label == "P") q = encode_rectilinear(fake);
    };
    options.adversary.on_classical = [fake](std::string_view hop, std::string_view label,
                                            BitString& b) {
      if (hop == kHopAliceBob && label == "P") b = fake;
    };
  }

  auto result = run_signature(c.scheme, setup.message, setup.parties, options, c);
  const auto ruling = resolve_dispute(result.transcript, setup.parties.signer_key(),
                                      setup.parties.receiver_key(), c.params);
  result.transcript.note(EventKind::Verdict, "arbitrator", "ruling",
                         {{"signer", std::string(to_string(ruling.signer))},
                          {"receiver", std::string(to_string(ruling.receiver))}});

  CommandResult out = finish_signature(result, c, c.scheme);
  out.summary += "ruling: signer " + std::string(to_string(ruling.signer)) + ", receiver " +
                 std::string(to_string(ruling.receiver)) + '\n';
  const bool both = ruling.signer == Binding::Bound && ruling.receiver == Binding::Bound;
  out.outcome = both ? "Bound" : "Inconclusive";
  out.exit_code = both ? exit_codes::kOk : exit_codes::kDisputeInconclusive;
  return out;
}

}  // namespace

CommandResult run_command(std::string_view command, const RunConfig& config) {
  if (command == "sign-recovery") return sign_command(config, Scheme::Recovery, command);
  if (command == "sign-appendix") return sign_command(config, Scheme::Appendix, command);
  if (command == "attack") return attack_command(config);
  if (command == "efficiency") return efficiency_command(config);
  if (command == "payment") return payment_command(config);
  if (command == "dispute") return dispute_command(config);
  throw Error(ErrorCode::InvalidConfig, "unknown command '" + std::string(command) + "'");
}

}  // namespace aqs
