#include "hop.hpp"

#include "aqs/error.hpp"

namespace aqs::detail {

void send_qubits(Transcript& t, std::string_view actor, std::string_view hop,
                 std::vector<QubitMessage> messages, const ChannelModel& channel,
                 const Adversary& adversary, RandomSource& rng) {
  QubitString wire;
  for (auto& m : messages) {
    t.qubit_send(std::string(actor), std::string(hop), m.label, *m.qubits);
    if (adversary.on_qubits) adversary.on_qubits(hop, m.label, *m.qubits);
    wire.insert(wire.end(), m.qubits->begin(), m.qubits->end());
  }
  wire = transmit(std::move(wire), channel, rng);
  auto it = wire.begin();
  for (auto& m : messages) {
    const auto len = static_cast<std::ptrdiff_t>(m.qubits->size());
    m.qubits->assign(it, it + len);
    it += len;
  }
}

void send_classical(Transcript& t, std::string_view actor, std::string_view hop,
                    std::string_view label, BitString& bits, const Adversary& adversary) {
  t.classical_send(std::string(actor), std::string(hop), std::string(label), bits);
  if (adversary.on_classical) adversary.on_classical(hop, label, bits);
}

std::map<std::string, std::string> error_fields(const Error& e) {
  return {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
}

}  // namespace aqs::detail
