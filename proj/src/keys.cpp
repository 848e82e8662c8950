#include "aqs/keys.hpp"

#include <span>

#include "aqs/error.hpp"
#include "aqs/hash.hpp"

namespace aqs {

IdentityString IdentityString::from_name(std::string_view name, std::size_t k) {
  std::vector<std::uint8_t> input{0x10};
  input.insert(input.end(), name.begin(), name.end());
  return IdentityString(shake256_bits(input, k));
}

void KeyRecord::require_usable() const {
  if (expired()) {
    throw Error(ErrorCode::ExpiredKey, "key for party " + party_id.bits().to_string() +
                                           " expired after " + std::to_string(abort_count) +
                                           " aborts");
  }
}

void KeyRecord::use() {
  require_usable();
  ++uses;
}

KeyRecord KeyStore::share_key(const IdentityString& party, const IdentityString& counterparty,
                              std::size_t length, RandomSource& rng, std::size_t xi_max) {
  KeyRecord record{party, random_bits(length, rng), 0, 0, xi_max};
  records_.insert_or_assign(Slot{party.bits().to_string(), counterparty.bits().to_string()},
                            record);
  return record;
}

KeyRecord& KeyStore::store(const IdentityString& counterparty, KeyRecord record) {
  auto slot = Slot{record.party_id.bits().to_string(), counterparty.bits().to_string()};
  return records_.insert_or_assign(std::move(slot), std::move(record)).first->second;
}

bool KeyStore::contains(const IdentityString& party, const IdentityString& counterparty) const {
  return records_.contains(Slot{party.bits().to_string(), counterparty.bits().to_string()});
}

KeyRecord& KeyStore::at(const IdentityString& party, const IdentityString& counterparty) {
  auto it = records_.find(Slot{party.bits().to_string(), counterparty.bits().to_string()});
  if (it == records_.end()) throw Error(ErrorCode::UnknownAccount, "no shared key for party");
  return it->second;
}

const KeyRecord& KeyStore::at(const IdentityString& party,
                              const IdentityString& counterparty) const {
  return const_cast<KeyStore*>(this)->at(party, counterparty);
}

}  // namespace aqs
