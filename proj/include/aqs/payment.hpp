#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aqs/bits.hpp"
#include "aqs/hash.hpp"
#include "aqs/keys.hpp"
#include "aqs/protocol.hpp"
#include "aqs/qubit.hpp"
#include "aqs/transcript.hpp"

// On-line quantum check payment: registration, payment, capture and
// settlement on top of the appendix signature.
//
// Check layout, every field 32 bits MSB-first:
//   P1 = payee name | payer name | payer account | amount | purpose | written day | expiry day
//   P2 = payee name | payee account | amount
// Names and purpose are the first 32 bits of SHAKE256(0x20 || utf8 text).
// Days are counts from an arbitrary epoch.
namespace aqs::payment {

inline constexpr std::size_t kFieldBits = 32;
inline constexpr std::size_t kCheckPart1Bits = 7 * kFieldBits;
inline constexpr std::size_t kCheckPart2Bits = 3 * kFieldBits;
inline constexpr std::size_t kAccountBits = 32;

std::uint32_t text_field(std::string_view text);

struct CheckPart1 {
  std::uint32_t payee_name = 0;     // p1
  std::uint32_t payer_name = 0;     // p2
  std::uint32_t payer_account = 0;  // p3
  std::uint32_t amount = 0;         // p4
  std::uint32_t purpose = 0;        // p5
  std::uint32_t written_day = 0;    // p6
  std::uint32_t expiry_day = 0;     // p7

  /// Throws MalformedCheck when written_day > expiry_day.
  void validate() const;
  BitString serialize() const;
  static CheckPart1 parse(const BitString& bits);

  friend bool operator==(const CheckPart1&, const CheckPart1&) = default;
};

struct CheckPart2 {
  std::uint32_t payee_name = 0;     // p8
  std::uint32_t payee_account = 0;  // p9
  std::uint32_t amount = 0;         // p10

  BitString serialize() const;
  static CheckPart2 parse(const BitString& bits);

  friend bool operator==(const CheckPart2&, const CheckPart2&) = default;
};

struct SettlementRecord {
  std::uint64_t seq = 0;
  std::uint32_t payer_account = 0;
  std::uint32_t payee_account = 0;
  std::uint64_t amount = 0;

  friend bool operator==(const SettlementRecord&, const SettlementRecord&) = default;
};

/// Account balances plus the append-only settlement history.
///
/// Text form, one record per line:
///   # aqs-ledger 1
///   account <number> <balance>
///   settlement <seq> <payer account> <payee account> <amount>
class Ledger {
 public:
  void open_account(std::uint32_t account, std::uint64_t balance = 0);
  bool has_account(std::uint32_t account) const { return balances_.contains(account); }
  std::uint64_t balance(std::uint32_t account) const;
  std::uint64_t total() const;

  /// Moves `amount` between two accounts. Throws UnknownAccount or
  /// InsufficientFunds and leaves the ledger untouched on either.
  const SettlementRecord& transfer(std::uint32_t payer, std::uint32_t payee, std::uint64_t amount);

  const std::map<std::uint32_t, std::uint64_t>& accounts() const noexcept { return balances_; }
  const std::vector<SettlementRecord>& history() const noexcept { return history_; }

  std::string to_text() const;
  static Ledger from_text(std::string_view text);
  void save(const std::string& path) const;
  static Ledger load(const std::string& path);

  friend bool operator==(const Ledger&, const Ledger&) = default;

 private:
  std::map<std::uint32_t, std::uint64_t> balances_;
  std::vector<SettlementRecord> history_;
};

enum class BankRole { Issuer, Acquirer };

/// The party's view after registering: long-term key and account info.
struct RegistrationRecord {
  IdentityString party_id;
  BankRole role = BankRole::Issuer;
  KeyRecord key;            // n2 bits, shared with the bank
  BitString account_info;   // CAI (payer) or NAI (payee), 32 bits

  std::uint32_t account() const { return static_cast<std::uint32_t>(account_info.to_uint()); }
};

/// Quantum one-time pad: plaintext bit b with key pair (v, c) becomes the
/// qubit (basis c, bit b xor v). Uses 2 * |plaintext| key bits.
QubitString otp_encrypt(const BitString& key, const BitString& plaintext);
BitString otp_decrypt(const BitString& key, QubitString& ciphertext, RandomSource& rng);

/// Issuer and acquirer folded into one bank.
class Bank {
 public:
  explicit Bank(IdentityString id = IdentityString::from_name("bank", 16)) : id_(std::move(id)) {}

  /// Shares n2 + 2 * (k + 32) key bits with the party, keeps the first n2 as
  /// the long-term key, and sends U || account info under the one-time pad
  /// made from the rest. Throws AlreadyRegistered.
  RegistrationRecord register_party(const IdentityString& party, BankRole role,
                                    const ProtocolParams& params, RandomSource& rng,
                                    const ChannelModel& channel = ChannelModel::identity());

  /// Stored U || account info for a party, as the bank's database holds it.
  const BitString* stored_record(const IdentityString& party) const;
  /// Registration owning `account`, if any.
  const IdentityString* owner(std::uint32_t account) const;
  KeyRecord& key(const IdentityString& party) { return keys_.at(party, id_); }
  const IdentityString& id() const noexcept { return id_; }

 private:
  IdentityString id_;
  KeyStore keys_;
  std::map<std::string, BitString> database_;
  std::map<std::uint32_t, IdentityString> owners_;
};

struct SignedCheck {
  QubitString s1;
  CheckPart1 p1;
};

struct EndorsedCheck {
  QubitString s1;
  QubitString s2;
  CheckPart1 p1;
  CheckPart2 p2;
};

SignedCheck pay(const CheckPart1& check, RegistrationRecord& payer, const ProtocolContext& ctx,
                RandomSource& rng);

EndorsedCheck capture(SignedCheck package, RegistrationRecord& payee, const CheckPart2& check,
                      const ProtocolContext& ctx, RandomSource& rng);

enum class SettlementStatus {
  Committed,
  RejectedSignaturePayer,
  RejectedSignaturePayee,
  RejectedMismatch,
  RejectedExpired,  // strict mode only
};

std::string_view to_string(SettlementStatus s);

struct SettlementResult {
  SettlementStatus status = SettlementStatus::RejectedMismatch;
  std::uint64_t amount = 0;

  bool committed() const noexcept { return status == SettlementStatus::Committed; }
};

struct SettleOptions {
  bool strict_expiry = false;  // also reject checks past their expiry day
  std::uint32_t today = 0;
  Transcript* transcript = nullptr;  // receives notifications and the commit
};

/// Verifies s1 against P1 under the payer's key and s2 against P2 under the
/// payee's key (the owners of p3 and p9), requires p1 == p8 and p4 == p10,
/// then debits p3 and credits p9. Rejections leave the ledger untouched.
SettlementResult settle(EndorsedCheck package, Bank& bank, Ledger& ledger,
                        const ProtocolContext& ctx, RandomSource& rng,
                        const SettleOptions& options = {});

inline constexpr std::string_view kHopPayerPayee = "payer-payee";
inline constexpr std::string_view kHopPayeeBank = "payee-bank";

struct PaymentScenario {
  ProtocolParams params = ProtocolParams::defaults();
  Transport transport = Transport::ClassicalP;
  ChannelModel payer_payee;
  ChannelModel payee_bank;
  Adversary adversary;
  std::string payer = "payer";
  std::string payee = "payee";
  std::string purpose = "goods";
  std::uint32_t amount = 50;        // p4
  std::uint32_t payee_amount = 50;  // p10
  std::uint64_t opening_balance = 100;
  std::uint32_t written_day = 0;
  std::uint32_t expiry_day = 30;
  bool strict_expiry = false;
  std::uint32_t today = 0;
  bool replay = false;  // settle a copy of the endorsed package a second time
  std::optional<std::string> ledger_path;
};

struct PaymentOutcome {
  std::optional<SettlementResult> result;
  std::optional<SettlementResult> replay_result;
  Ledger ledger;
  Transcript transcript;
  std::optional<std::string> failure;
};

/// Registration, payment, capture and settlement end to end. When a ledger
/// path is set the ledger is loaded from it (if present) and saved after
/// every committed settlement.
PaymentOutcome run_payment_scenario(const PaymentScenario& scenario, std::uint64_t seed);

}  // namespace aqs::payment
