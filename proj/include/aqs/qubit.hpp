#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "aqs/bits.hpp"
#include "aqs/random.hpp"

namespace aqs {

enum class Basis : std::uint8_t { Rectilinear, Diagonal };

inline Basis basis_for_key_bit(Bit k) { return k ? Basis::Diagonal : Basis::Rectilinear; }

/// One of the four conjugate-coding states:
///   (R,0)=|0>  (R,1)=|1>  (D,0)=|+>  (D,1)=|->
/// A qubit can be measured once; a second measurement throws DoubleMeasurement.
class Qubit {
 public:
  Qubit(Basis basis, Bit bit) : basis_(basis), bit_(bit & 1u) {}

  Basis basis() const noexcept { return basis_; }
  Bit bit() const noexcept { return bit_; }
  bool consumed() const noexcept { return consumed_; }

  /// Single-character state label: '0', '1', '+', '-'.
  char symbol() const;
  static Qubit from_symbol(char c);

  /// Same state, ignoring whether either instance has been measured.
  bool same_state(const Qubit& other) const {
    return basis_ == other.basis_ && bit_ == other.bit_;
  }
  friend bool operator==(const Qubit&, const Qubit&) = default;

  friend Bit measure(Qubit& qubit, Basis basis, RandomSource& rng);

 private:
  Basis basis_;
  Bit bit_;
  bool consumed_ = false;
};

using QubitString = std::vector<Qubit>;

/// Projective measurement in `basis`. Matching basis returns the prepared bit;
/// the conjugate basis returns a uniform bit from `rng`. Consumes the qubit.
Bit measure(Qubit& qubit, Basis basis, RandomSource& rng);

/// Key bit 0 selects basis R, 1 selects D; data bit selects the state in it.
QubitString encode_conjugate(const BitString& key, const BitString& data);
/// Measures each qubit in the basis chosen by the matching key bit.
BitString decode_conjugate(const BitString& key, QubitString& qubits, RandomSource& rng);

/// All-rectilinear encoding, used when a classical message rides the quantum channel.
QubitString encode_rectilinear(const BitString& data);
BitString decode_rectilinear(QubitString& qubits, RandomSource& rng);

std::string to_symbols(const QubitString& qubits);
QubitString from_symbols(std::string_view symbols);

struct ChannelModel {
  enum class Kind { Identity, InterceptResend, Substitute, BitFlip };

  Kind kind = Kind::Identity;
  std::size_t position = 0;
  Qubit replacement{Basis::Rectilinear, 0};

  static ChannelModel identity() { return {}; }
  static ChannelModel intercept_resend() { return {Kind::InterceptResend}; }
  static ChannelModel substitute(std::size_t position, Qubit replacement) {
    return {Kind::Substitute, position, replacement};
  }
  static ChannelModel bit_flip(std::size_t position) {
    return {Kind::BitFlip, position};
  }

  /// Text form: "identity", "intercept-resend", "bitflip:<pos>",
  /// "substitute:<pos>:<state>" with state one of 0 1 + -.
  std::string to_string() const;
  static ChannelModel parse(std::string_view text);

  friend bool operator==(const ChannelModel&, const ChannelModel&) = default;
};

/// Passes `qubits` through `channel`. Positions index the string as sent.
QubitString transmit(QubitString qubits, const ChannelModel& channel, RandomSource& rng);

}  // namespace aqs
