#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invset/exactnum/rational_angle.hpp"

namespace invset::finitestates {

using exactnum::RationalAngle;

/// One computational-basis amplitude: squared modulus m/N and phase in turns.
struct Amplitude {
  std::uint64_t m = 0;
  RationalAngle phase;

  friend bool operator==(const Amplitude&, const Amplitude&) = default;
};

/// A Hilbert state whose squared moduli are multiples of 1/N and whose phases
/// are multiples of 1/N of a turn. Stored as integers and exact angles; the
/// complex amplitude never exists in this representation.
///
/// The constructor only canonicalises (zero-modulus phases become 0). Use
/// validate_finite_state() to check the finiteness conditions.
class FiniteHilbertState {
 public:
  FiniteHilbertState(std::uint64_t N, std::vector<Amplitude> amps);

  [[nodiscard]] std::uint64_t N() const { return N_; }
  [[nodiscard]] const std::vector<Amplitude>& amplitudes() const { return amps_; }

  friend bool operator==(const FiniteHilbertState&, const FiniteHilbertState&) = default;

 private:
  std::uint64_t N_;
  std::vector<Amplitude> amps_;
};

/// Lists every violated finiteness condition; an empty result means valid.
[[nodiscard]] std::vector<std::string> validate_finite_state(const FiniteHilbertState& s);

}  // namespace invset::finitestates
