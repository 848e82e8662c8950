#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aqs/bits.hpp"
#include "aqs/qubit.hpp"

namespace aqs {

enum class EventKind {
  QubitSend,
  ClassicalSend,
  Measurement,
  Verdict,
  Notification,
  LedgerCommit,
  Failure,
};

std::string_view to_string(EventKind kind);
EventKind parse_event_kind(std::string_view text);

struct Event {
  std::size_t seq = 0;
  std::string actor;
  EventKind kind = EventKind::Notification;
  std::string hop;    // "alice-bob", ... ; empty for local events
  std::string label;  // message name: "s_a", "y_b", "P", ...
  std::size_t qubits = 0;
  std::size_t bits = 0;
  std::map<std::string, std::string> fields;
  std::optional<BitString> payload_bits;
  // Held in memory as dispute evidence; only serialized in debug mode.
  std::optional<QubitString> payload_qubits;

  friend bool operator==(const Event&, const Event&) = default;
};

/// Ordered log of one run. Sequence numbers start at 0 and increase by one.
class Transcript {
 public:
  static constexpr int kSchemaVersion = 1;

  Transcript() = default;
  Transcript(std::string scheme, std::uint64_t seed) : scheme_(std::move(scheme)), seed_(seed) {}

  Event& append(Event event);
  Event& qubit_send(std::string actor, std::string hop, std::string label, const QubitString& q);
  Event& classical_send(std::string actor, std::string hop, std::string label, const BitString& b);
  Event& note(EventKind kind, std::string actor, std::string label,
              std::map<std::string, std::string> fields = {});

  const std::vector<Event>& events() const noexcept { return events_; }
  bool empty() const noexcept { return events_.empty(); }

  const std::string& scheme() const noexcept { return scheme_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::size_t signed_bits() const noexcept { return signed_bits_; }
  void set_signed_bits(std::size_t n) { signed_bits_ = n; }
  const std::map<std::string, std::string>& parties() const noexcept { return parties_; }
  void set_party(const std::string& role, const BitString& identity) {
    parties_[role] = identity.to_string();
  }

  /// JSON-lines: a header object on line one, then one event per line.
  /// Qubit payloads (basis/bit) are written only when `debug` is set.
  std::string to_jsonl(bool debug = false) const;
  static Transcript from_jsonl(std::string_view text);

  /// Copy without qubit payloads; what a non-debug round trip yields.
  Transcript redacted() const;

  friend bool operator==(const Transcript&, const Transcript&) = default;

 private:
  std::string scheme_;
  std::uint64_t seed_ = 0;
  std::size_t signed_bits_ = 0;
  std::map<std::string, std::string> parties_;
  std::vector<Event> events_;
};

}  // namespace aqs
