#include "aqs/transcript.hpp"

#include <json.hpp>

#include <sstream>

#include "aqs/error.hpp"

namespace aqs {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kSchemaName = "aqs-transcript";

constexpr std::pair<EventKind, std::string_view> kKindNames[] = {
    {EventKind::QubitSend, "QubitSend"},   {EventKind::ClassicalSend, "ClassicalSend"},
    {EventKind::Measurement, "Measurement"}, {EventKind::Verdict, "Verdict"},
    {EventKind::Notification, "Notification"}, {EventKind::LedgerCommit, "LedgerCommit"},
    {EventKind::Failure, "Failure"},
};

}  // namespace

std::string_view to_string(EventKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "Notification";
}

EventKind parse_event_kind(std::string_view text) {
  for (const auto& [k, name] : kKindNames) {
    if (name == text) return k;
  }
  throw Error(ErrorCode::MalformedTranscript, "unknown event kind '" + std::string(text) + "'");
}

Event& Transcript::append(Event event) {
  event.seq = events_.size();
  events_.push_back(std::move(event));
  return events_.back();
}

Event& Transcript::qubit_send(std::string actor, std::string hop, std::string label,
                              const QubitString& q) {
  Event e;
  e.actor = std::move(actor);
  e.kind = EventKind::QubitSend;
  e.hop = std::move(hop);
  e.label = std::move(label);
  e.qubits = q.size();
  e.payload_qubits = q;
  return append(std::move(e));
}

Event& Transcript::classical_send(std::string actor, std::string hop, std::string label,
                                  const BitString& b) {
  Event e;
  e.actor = std::move(actor);
  e.kind = EventKind::ClassicalSend;
  e.hop = std::move(hop);
  e.label = std::move(label);
  e.bits = b.size();
  e.payload_bits = b;
  return append(std::move(e));
}

Event& Transcript::note(EventKind kind, std::string actor, std::string label,
                        std::map<std::string, std::string> fields) {
  Event e;
  e.actor = std::move(actor);
  e.kind = kind;
  e.label = std::move(label);
  e.fields = std::move(fields);
  return append(std::move(e));
}

std::string Transcript::to_jsonl(bool debug) const {
  std::ostringstream out;
  Json header;
  header["schema"] = kSchemaName;
  header["version"] = kSchemaVersion;
  header["scheme"] = scheme_;
  header["seed"] = seed_;
  header["signed_bits"] = signed_bits_;
  header["parties"] = parties_;
  header["debug"] = debug;
  out << header.dump() << '\n';
  for (const auto& e : events_) {
    Json j;
    j["seq"] = e.seq;
    j["actor"] = e.actor;
    j["kind"] = to_string(e.kind);
    j["hop"] = e.hop;
    j["label"] = e.label;
    j["qubits"] = e.qubits;
    j["bits"] = e.bits;
    if (!e.fields.empty()) j["fields"] = e.fields;
    if (e.payload_bits) j["payload_bits"] = e.payload_bits->to_string();
    if (debug && e.payload_qubits) j["payload_qubits"] = to_symbols(*e.payload_qubits);
    out << j.dump() << '\n';
  }
  return out.str();
}

Transcript Transcript::from_jsonl(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Transcript t;
  bool have_header = false;
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto j = Json::parse(line);
      if (!have_header) {
        if (j.value("schema", "") != kSchemaName) {
          throw Error(ErrorCode::MalformedTranscript, "missing transcript header");
        }
        t.scheme_ = j.at("scheme").get<std::string>();
        t.seed_ = j.at("seed").get<std::uint64_t>();
        t.signed_bits_ = j.at("signed_bits").get<std::size_t>();
        t.parties_ = j.at("parties").get<std::map<std::string, std::string>>();
        have_header = true;
        continue;
      }
      Event e;
      e.seq = j.at("seq").get<std::size_t>();
      e.actor = j.at("actor").get<std::string>();
      e.kind = parse_event_kind(j.at("kind").get<std::string>());
      e.hop = j.at("hop").get<std::string>();
      e.label = j.at("label").get<std::string>();
      e.qubits = j.at("qubits").get<std::size_t>();
      e.bits = j.at("bits").get<std::size_t>();
      if (j.contains("fields")) e.fields = j["fields"].get<std::map<std::string, std::string>>();
      if (j.contains("payload_bits")) {
        e.payload_bits = BitString::parse(j["payload_bits"].get<std::string>());
      }
      if (j.contains("payload_qubits")) {
        e.payload_qubits = from_symbols(j["payload_qubits"].get<std::string>());
      }
      if (e.seq != t.events_.size()) {
        throw Error(ErrorCode::MalformedTranscript, "event sequence numbers out of order");
      }
      t.events_.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::MalformedTranscript, ex.what());
  } catch (const Error& ex) {
    if (ex.code() == ErrorCode::MalformedTranscript) throw;
    throw Error(ErrorCode::MalformedTranscript, ex.what());
  }
  if (!have_header) throw Error(ErrorCode::MalformedTranscript, "empty transcript");
  return t;
}

Transcript Transcript::redacted() const {
  Transcript t = *this;
  for (auto& e : t.events_) e.payload_qubits.reset();
  return t;
}

}  // namespace aqs
