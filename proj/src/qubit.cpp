#include "aqs/qubit.hpp"

#include <charconv>

#include "aqs/error.hpp"

namespace aqs {

char Qubit::symbol() const {
  if (basis_ == Basis::Rectilinear) return bit_ ? '1' : '0';
  return bit_ ? '-' : '+';
}

Qubit Qubit::from_symbol(char c) {
  switch (c) {
    case '0': return {Basis::Rectilinear, 0};
    case '1': return {Basis::Rectilinear, 1};
    case '+': return {Basis::Diagonal, 0};
    case '-': return {Basis::Diagonal, 1};
    default:
      throw Error(ErrorCode::InvalidConfig, std::string("unknown qubit state '") + c + "'");
  }
}

Bit measure(Qubit& qubit, Basis basis, RandomSource& rng) {
  if (qubit.consumed_) throw Error(ErrorCode::DoubleMeasurement, "qubit already measured");
  qubit.consumed_ = true;
  return basis == qubit.basis_ ? qubit.bit_ : rng.bit();
}

QubitString encode_conjugate(const BitString& key, const BitString& data) {
  if (key.size() != data.size()) {
    throw Error(ErrorCode::LengthMismatch, "conjugate encoding needs key and data of equal length");
  }
  QubitString out;
  out.reserve(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) out.emplace_back(basis_for_key_bit(key[i]), data[i]);
  return out;
}

BitString decode_conjugate(const BitString& key, QubitString& qubits, RandomSource& rng) {
  if (key.size() != qubits.size()) {
    throw Error(ErrorCode::LengthMismatch, "conjugate decoding needs key and qubits of equal length");
  }
  std::vector<Bit> out(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) {
    out[i] = measure(qubits[i], basis_for_key_bit(key[i]), rng);
  }
  return BitString(std::move(out));
}

QubitString encode_rectilinear(const BitString& data) {
  return encode_conjugate(BitString::zeros(data.size()), data);
}

BitString decode_rectilinear(QubitString& qubits, RandomSource& rng) {
  return decode_conjugate(BitString::zeros(qubits.size()), qubits, rng);
}

std::string to_symbols(const QubitString& qubits) {
  std::string s;
  s.reserve(qubits.size());
  for (const auto& q : qubits) s.push_back(q.symbol());
  return s;
}

QubitString from_symbols(std::string_view symbols) {
  QubitString out;
  out.reserve(symbols.size());
  for (char c : symbols) out.push_back(Qubit::from_symbol(c));
  return out;
}

std::string ChannelModel::to_string() const {
  switch (kind) {
    case Kind::Identity: return "identity";
    case Kind::InterceptResend: return "intercept-resend";
    case Kind::BitFlip: return "bitflip:" + std::to_string(position);
    case Kind::Substitute:
      return "substitute:" + std::to_string(position) + ":" + replacement.symbol();
  }
  return "identity";
}

namespace {

std::size_t parse_position(std::string_view text) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::InvalidConfig, "bad channel position '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

ChannelModel ChannelModel::parse(std::string_view text) {
  if (text == "identity") return identity();
  if (text == "intercept-resend") return intercept_resend();
  if (text.starts_with("bitflip:")) return bit_flip(parse_position(text.substr(8)));
  if (text.starts_with("substitute:")) {
    auto rest = text.substr(11);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos || colon + 2 != rest.size()) {
      throw Error(ErrorCode::InvalidConfig, "substitute channel needs 'substitute:<pos>:<state>'");
    }
    return substitute(parse_position(rest.substr(0, colon)), Qubit::from_symbol(rest.back()));
  }
  throw Error(ErrorCode::InvalidConfig, "unknown channel model '" + std::string(text) + "'");
}

QubitString transmit(QubitString qubits, const ChannelModel& channel, RandomSource& rng) {
  using Kind = ChannelModel::Kind;
  if ((channel.kind == Kind::Substitute || channel.kind == Kind::BitFlip) &&
      channel.position >= qubits.size()) {
    throw Error(ErrorCode::PositionOutOfRange,
                "channel position " + std::to_string(channel.position) + " outside a string of " +
                    std::to_string(qubits.size()) + " qubits");
  }
  switch (channel.kind) {
    case Kind::Identity:
      break;
    case Kind::InterceptResend:
      for (auto& q : qubits) {
        const Basis guess = rng.bit() ? Basis::Diagonal : Basis::Rectilinear;
        const Bit seen = measure(q, guess, rng);
        q = Qubit(guess, seen);
      }
      break;
    case Kind::Substitute:
      qubits[channel.position] = Qubit(channel.replacement.basis(), channel.replacement.bit());
      break;
    case Kind::BitFlip: {
      const auto& q = qubits[channel.position];
      qubits[channel.position] = Qubit(q.basis(), q.bit() ^ 1u);
      break;
    }
  }
  return qubits;
}

}  // namespace aqs
