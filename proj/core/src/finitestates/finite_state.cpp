#include "invset/finitestates/finite_state.hpp"

#include <bit>

namespace invset::finitestates {

FiniteHilbertState::FiniteHilbertState(std::uint64_t N, std::vector<Amplitude> amps)
    : N_(N), amps_(std::move(amps)) {
  for (auto& a : amps_) {
    if (a.m == 0) a.phase = RationalAngle();
  }
}

std::vector<std::string> validate_finite_state(const FiniteHilbertState& s) {
  std::vector<std::string> out;
  const auto N = s.N();
  if (N < 2) out.push_back("base: N = " + std::to_string(N) + " < 2");

  const auto count = s.amplitudes().size();
  if (!std::has_single_bit(count)) {
    out.push_back("dimension: " + std::to_string(count) + " amplitudes is not a power of two");
  }

  exactnum::BigInt total = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& a = s.amplitudes()[i];
    total += a.m;
    if (a.m > N) {
      out.push_back("modulus: amplitude " + std::to_string(i) + " has m = " + std::to_string(a.m) + " > N = " +
                    std::to_string(N));
    }
    const auto den = a.phase.turns().den();
    if (N == 0 || exactnum::BigInt(N) % den != 0) {
      out.push_back("phase denominator " + den.str() + " ∤ " + std::to_string(N) + " (amplitude " +
                    std::to_string(i) + ")");
    }
  }
  if (total != N) {
    out.push_back("normalization: Σm = " + total.str() + " ≠ N = " + std::to_string(N));
  }
  return out;
}

}  // namespace invset::finitestates
