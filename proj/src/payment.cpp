#include "aqs/payment.hpp"

#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "aqs/appendix.hpp"
#include "aqs/error.hpp"
#include "hop.hpp"

namespace aqs::payment {

std::uint32_t text_field(std::string_view text) {
  std::vector<std::uint8_t> input{0x20};
  input.insert(input.end(), text.begin(), text.end());
  return static_cast<std::uint32_t>(shake256_bits(input, kFieldBits).to_uint());
}

namespace {

BitString fields_to_bits(std::initializer_list<std::uint32_t> fields) {
  std::vector<BitString> parts;
  for (auto f : fields) parts.push_back(BitString::from_uint(f, kFieldBits));
  return concat(parts);
}

std::vector<std::uint32_t> bits_to_fields(const BitString& bits, std::size_t count) {
  if (bits.size() != count * kFieldBits) {
    throw Error(ErrorCode::MalformedCheck, "check part has " + std::to_string(bits.size()) +
                                               " bits, expected " +
                                               std::to_string(count * kFieldBits));
  }
  std::vector<std::size_t> lengths(count, kFieldBits);
  std::vector<std::uint32_t> out;
  for (const auto& part : split(bits, lengths)) out.push_back(static_cast<std::uint32_t>(part.to_uint()));
  return out;
}

}  // namespace

void CheckPart1::validate() const {
  if (written_day > expiry_day) {
    throw Error(ErrorCode::MalformedCheck, "check written after its expiry date");
  }
}

BitString CheckPart1::serialize() const {
  return fields_to_bits(
      {payee_name, payer_name, payer_account, amount, purpose, written_day, expiry_day});
}

CheckPart1 CheckPart1::parse(const BitString& bits) {
  auto f = bits_to_fields(bits, 7);
  return {f[0], f[1], f[2], f[3], f[4], f[5], f[6]};
}

BitString CheckPart2::serialize() const {
  return fields_to_bits({payee_name, payee_account, amount});
}

CheckPart2 CheckPart2::parse(const BitString& bits) {
  auto f = bits_to_fields(bits, 3);
  return {f[0], f[1], f[2]};
}

void Ledger::open_account(std::uint32_t account, std::uint64_t balance) {
  balances_.insert_or_assign(account, balance);
}

std::uint64_t Ledger::balance(std::uint32_t account) const {
  auto it = balances_.find(account);
  if (it == balances_.end()) {
    throw Error(ErrorCode::UnknownAccount, "no account " + std::to_string(account));
  }
  return it->second;
}

std::uint64_t Ledger::total() const {
  return std::accumulate(balances_.begin(), balances_.end(), std::uint64_t{0},
                         [](std::uint64_t sum, const auto& kv) { return sum + kv.second; });
}

const SettlementRecord& Ledger::transfer(std::uint32_t payer, std::uint32_t payee,
                                         std::uint64_t amount) {
  const auto from = balance(payer);
  (void)balance(payee);
  if (from < amount) {
    throw Error(ErrorCode::InsufficientFunds, "account " + std::to_string(payer) + " holds " +
                                                  std::to_string(from) + ", needs " +
                                                  std::to_string(amount));
  }
  balances_[payer] -= amount;
  balances_[payee] += amount;
  history_.push_back({history_.size(), payer, payee, amount});
  return history_.back();
}

std::string Ledger::to_text() const {
  std::ostringstream out;
  out << "# aqs-ledger 1\n";
  for (const auto& [account, balance] : balances_) out << "account " << account << ' ' << balance << '\n';
  for (const auto& s : history_) {
    out << "settlement " << s.seq << ' ' << s.payer_account << ' ' << s.payee_account << ' '
        << s.amount << '\n';
  }
  return out.str();
}

Ledger Ledger::from_text(std::string_view text) {
  Ledger ledger;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::string kind;
    fields >> kind;
    bool ok = false;
    if (kind == "account") {
      std::uint32_t account = 0;
      std::uint64_t balance = 0;
      ok = static_cast<bool>(fields >> account >> balance);
      if (ok) ledger.balances_[account] = balance;
    } else if (kind == "settlement") {
      SettlementRecord s;
      ok = static_cast<bool>(fields >> s.seq >> s.payer_account >> s.payee_account >> s.amount);
      if (ok) ledger.history_.push_back(s);
    }
    if (!ok) throw Error(ErrorCode::Io, "ledger line " + std::to_string(lineno) + " is malformed");
  }
  return ledger;
}

void Ledger::save(const std::string& path) const {
  std::ofstream out(path, std::ios::trunc);
  out << to_text();
  if (!out) throw Error(ErrorCode::Io, "cannot write ledger to " + path);
}

Ledger Ledger::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read ledger from " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_text(buffer.str());
}

QubitString otp_encrypt(const BitString& key, const BitString& plaintext) {
  if (key.size() != 2 * plaintext.size()) {
    throw Error(ErrorCode::LengthMismatch, "one-time pad needs two key bits per plaintext bit");
  }
  QubitString out;
  out.reserve(plaintext.size());
  for (std::size_t i = 0; i < plaintext.size(); ++i) {
    out.emplace_back(basis_for_key_bit(key[2 * i + 1]), plaintext[i] ^ key[2 * i]);
  }
  return out;
}

BitString otp_decrypt(const BitString& key, QubitString& ciphertext, RandomSource& rng) {
  if (key.size() != 2 * ciphertext.size()) {
    throw Error(ErrorCode::LengthMismatch, "one-time pad needs two key bits per qubit");
  }
  BitString out;
  for (std::size_t i = 0; i < ciphertext.size(); ++i) {
    out.push_back(measure(ciphertext[i], basis_for_key_bit(key[2 * i + 1]), rng) ^ key[2 * i]);
  }
  return out;
}

RegistrationRecord Bank::register_party(const IdentityString& party, BankRole role,
                                        const ProtocolParams& params, RandomSource& rng,
                                        const ChannelModel& channel) {
  const auto slot = party.bits().to_string();
  if (database_.contains(slot)) {
    throw Error(ErrorCode::AlreadyRegistered, "party " + slot + " is already registered");
  }
  if (party.size() != params.k) {
    throw Error(ErrorCode::LengthMismatch, "identity must have k bits");
  }
  std::uint32_t account;
  do {
    account = static_cast<std::uint32_t>(rng.next_u64());
  } while (owners_.contains(account));
  const auto info = BitString::from_uint(account, kAccountBits);
  const auto plaintext = concat({party.bits(), info});

  KeyStore exchange;
  auto shared = exchange.share_key(party, id_, params.n2 + 2 * plaintext.size(), rng);
  auto parts = split(shared.key, {params.n2, 2 * plaintext.size()});

  KeyRecord long_term{party, parts[0]};
  keys_.store(id_, long_term);

  auto ciphertext = transmit(otp_encrypt(parts[1], plaintext), channel, rng);
  auto received = otp_decrypt(parts[1], ciphertext, rng);

  database_.emplace(slot, plaintext);
  owners_.emplace(account, party);
  return {party, role, std::move(long_term), split(received, {params.k, kAccountBits})[1]};
}

const BitString* Bank::stored_record(const IdentityString& party) const {
  auto it = database_.find(party.bits().to_string());
  return it == database_.end() ? nullptr : &it->second;
}

const IdentityString* Bank::owner(std::uint32_t account) const {
  auto it = owners_.find(account);
  return it == owners_.end() ? nullptr : &it->second;
}

SignedCheck pay(const CheckPart1& check, RegistrationRecord& payer, const ProtocolContext& ctx,
                RandomSource& rng) {
  check.validate();
  auto sig = appendix::sign(check.serialize(), payer.key, payer.party_id, ctx, rng);
  return {std::move(sig.s_a), check};
}

EndorsedCheck capture(SignedCheck package, RegistrationRecord& payee, const CheckPart2& check,
                      const ProtocolContext& ctx, RandomSource& rng) {
  auto sig = appendix::sign(check.serialize(), payee.key, payee.party_id, ctx, rng);
  return {std::move(package.s1), std::move(sig.s_a), package.p1, check};
}

std::string_view to_string(SettlementStatus s) {
  switch (s) {
    case SettlementStatus::Committed: return "Committed";
    case SettlementStatus::RejectedSignaturePayer: return "RejectedSignature(payer)";
    case SettlementStatus::RejectedSignaturePayee: return "RejectedSignature(payee)";
    case SettlementStatus::RejectedMismatch: return "RejectedMismatch";
    case SettlementStatus::RejectedExpired: return "RejectedExpired";
  }
  return "RejectedMismatch";
}

namespace {

void notify(const SettleOptions& o, std::string label, std::string to) {
  if (o.transcript) o.transcript->note(EventKind::Notification, "bank", std::move(label), {{"to", std::move(to)}});
}

bool signature_valid(QubitString s, const BitString& message, const IdentityString* owner,
                     Bank& bank, const ProtocolContext& ctx, RandomSource& rng) {
  if (!owner || s.size() != ctx.params.n2) return false;
  return appendix::check_signature(std::move(s), message, bank.key(*owner), *owner, ctx, rng).valid;
}

}  // namespace

SettlementResult settle(EndorsedCheck package, Bank& bank, Ledger& ledger,
                        const ProtocolContext& ctx, RandomSource& rng,
                        const SettleOptions& options) {
  auto finish = [&](SettlementStatus status, std::uint64_t amount = 0) {
    if (options.transcript) {
      options.transcript->note(EventKind::Verdict, "bank", std::string(to_string(status)),
                               {{"amount", std::to_string(amount)}});
    }
    return SettlementResult{status, amount};
  };

  const auto& p1 = package.p1;
  const auto& p2 = package.p2;
  if (!signature_valid(std::move(package.s1), p1.serialize(), bank.owner(p1.payer_account), bank,
                       ctx, rng)) {
    notify(options, "signature-invalid", "payee");
    return finish(SettlementStatus::RejectedSignaturePayer);
  }
  if (!signature_valid(std::move(package.s2), p2.serialize(), bank.owner(p2.payee_account), bank,
                       ctx, rng)) {
    notify(options, "payee-dishonest", "payer");
    return finish(SettlementStatus::RejectedSignaturePayee);
  }
  if (p1.payee_name != p2.payee_name || p1.amount != p2.amount) {
    notify(options, "virement-rejected", "payer");
    notify(options, "virement-rejected", "payee");
    return finish(SettlementStatus::RejectedMismatch);
  }
  if (options.strict_expiry && options.today > p1.expiry_day) {
    notify(options, "check-expired", "payee");
    return finish(SettlementStatus::RejectedExpired);
  }
  const auto& record = ledger.transfer(p1.payer_account, p2.payee_account, p1.amount);
  if (options.transcript) {
    options.transcript->note(EventKind::LedgerCommit, "bank", "virement",
                             {{"seq", std::to_string(record.seq)},
                              {"payer_account", std::to_string(record.payer_account)},
                              {"payee_account", std::to_string(record.payee_account)},
                              {"amount", std::to_string(record.amount)}});
  }
  return finish(SettlementStatus::Committed, p1.amount);
}

namespace {

// Qubit strings plus the check parts; returns the check parts as received.
std::vector<BitString> send_check(Transcript& t, std::string_view actor, std::string_view hop,
                                  std::vector<detail::QubitMessage> signatures,
                                  std::vector<std::pair<std::string, BitString>> parts,
                                  const ChannelModel& channel, const PaymentScenario& s,
                                  RandomSource& rng) {
  std::vector<BitString> out;
  if (s.transport == Transport::QuantumP) {
    std::vector<QubitString> carried;
    carried.reserve(parts.size());
    for (auto& [label, bits] : parts) carried.push_back(encode_rectilinear(bits));
    for (std::size_t i = 0; i < parts.size(); ++i) signatures.push_back({parts[i].first, &carried[i]});
    detail::send_qubits(t, actor, hop, std::move(signatures), channel, s.adversary, rng);
    for (auto& q : carried) out.push_back(decode_rectilinear(q, rng));
    return out;
  }
  detail::send_qubits(t, actor, hop, std::move(signatures), channel, s.adversary, rng);
  for (auto& [label, bits] : parts) {
    detail::send_classical(t, actor, hop, label, bits, s.adversary);
    out.push_back(bits);
  }
  return out;
}

}  // namespace

PaymentOutcome run_payment_scenario(const PaymentScenario& s, std::uint64_t seed) {
  PaymentOutcome out;
  auto& t = out.transcript;
  t = Transcript("payment", seed);
  t.set_signed_bits(kCheckPart1Bits);
  RandomSource rng(seed);

  try {
    ProtocolContext ctx(s.params);
    Bank bank(IdentityString::from_name("bank", s.params.k));
    const auto payer_id = IdentityString::from_name(s.payer, s.params.k);
    const auto payee_id = IdentityString::from_name(s.payee, s.params.k);
    t.set_party("payer", payer_id.bits());
    t.set_party("payee", payee_id.bits());
    t.set_party("bank", bank.id().bits());

    auto payer = bank.register_party(payer_id, BankRole::Issuer, s.params, rng);
    auto payee = bank.register_party(payee_id, BankRole::Acquirer, s.params, rng);
    for (const auto* r : {&payer, &payee}) {
      t.note(EventKind::Notification, "bank", "registered",
             {{"account", std::to_string(r->account())},
              {"role", r->role == BankRole::Issuer ? "issuer" : "acquirer"}});
    }

    if (s.ledger_path && std::filesystem::exists(*s.ledger_path)) {
      out.ledger = Ledger::load(*s.ledger_path);
    }
    // Accounts already on a loaded ledger keep their balances.
    if (!out.ledger.has_account(payer.account())) {
      out.ledger.open_account(payer.account(), s.opening_balance);
    }
    if (!out.ledger.has_account(payee.account())) out.ledger.open_account(payee.account(), 0);

    CheckPart1 p1{text_field(s.payee), text_field(s.payer), payer.account(), s.amount,
                  text_field(s.purpose), s.written_day, s.expiry_day};
    auto signed_check = pay(p1, payer, ctx, rng);
    auto received = send_check(t, "payer", kHopPayerPayee, {{"s1", &signed_check.s1}},
                               {{"P1", p1.serialize()}}, s.payer_payee, s, rng);
    signed_check.p1 = CheckPart1::parse(received[0]);

    CheckPart2 p2{text_field(s.payee), payee.account(), s.payee_amount};
    auto endorsed = capture(std::move(signed_check), payee, p2, ctx, rng);
    received = send_check(t, "payee", kHopPayeeBank, {{"s1", &endorsed.s1}, {"s2", &endorsed.s2}},
                          {{"P1", endorsed.p1.serialize()}, {"P2", p2.serialize()}}, s.payee_bank,
                          s, rng);
    endorsed.p1 = CheckPart1::parse(received[0]);
    endorsed.p2 = CheckPart2::parse(received[1]);

    // What a replaying attacker would have kept from the payee-bank hop.
    const auto replay_copy = endorsed;

    SettleOptions options{s.strict_expiry, s.today, &t};
    out.result = settle(std::move(endorsed), bank, out.ledger, ctx, rng, options);
    if (out.result->committed() && s.ledger_path) out.ledger.save(*s.ledger_path);

    if (s.replay) {
      t.note(EventKind::Notification, "attacker", "replay", {{"to", "bank"}});
      out.replay_result = settle(replay_copy, bank, out.ledger, ctx, rng, options);
      if (out.replay_result->committed()) {
        t.note(EventKind::Notification, "bank", "double-settlement", {{"check_amount", std::to_string(p1.amount)}});
        if (s.ledger_path) out.ledger.save(*s.ledger_path);
      }
    }
  } catch (const Error& err) {
    t.note(EventKind::Failure, "driver", "error", detail::error_fields(err));
    out.failure = err.what();
  }
  return out;
}

}  // namespace aqs::payment
