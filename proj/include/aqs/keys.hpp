#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "aqs/bits.hpp"
#include "aqs/random.hpp"

namespace aqs {

/// k-bit participant identity U_i.
class IdentityString {
 public:
  IdentityString() = default;
  explicit IdentityString(BitString bits) : bits_(std::move(bits)) {}

  /// Deterministic identity derived from a display name (SHAKE256, tag 0x10).
  static IdentityString from_name(std::string_view name, std::size_t k);

  const BitString& bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.size(); }

  friend bool operator==(const IdentityString&, const IdentityString&) = default;

 private:
  BitString bits_;
};

/// Long-term key shared between a party and the arbitrator (or bank).
/// The key expires once more than xi_max abnormal aborts were recorded on it.
struct KeyRecord {
  IdentityString party_id;
  BitString key;
  std::size_t uses = 0;
  std::size_t abort_count = 0;
  std::size_t xi_max = 3;

  bool expired() const noexcept { return abort_count > xi_max; }
  /// Throws ExpiredKey once the key has expired.
  void require_usable() const;
  /// require_usable(), then counts a use.
  void use();
  void record_abort() { ++abort_count; }
};

/// Registry of shared keys, indexed by (party, counterparty). Key exchange is
/// a trusted stub: both ends receive the same rng-drawn string.
class KeyStore {
 public:
  KeyRecord share_key(const IdentityString& party, const IdentityString& counterparty,
                      std::size_t length, RandomSource& rng, std::size_t xi_max = 3);

  /// Files an externally agreed key under (record.party_id, counterparty).
  KeyRecord& store(const IdentityString& counterparty, KeyRecord record);

  bool contains(const IdentityString& party, const IdentityString& counterparty) const;
  KeyRecord& at(const IdentityString& party, const IdentityString& counterparty);
  const KeyRecord& at(const IdentityString& party, const IdentityString& counterparty) const;
  std::size_t size() const noexcept { return records_.size(); }

 private:
  using Slot = std::pair<std::string, std::string>;
  std::map<Slot, KeyRecord> records_;
};

}  // namespace aqs
