#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invset/exactnum/rational.hpp"

namespace invset::detgen {

using exactnum::Rational;

/// A finite bit string a_1 a_2 ... a_n, optionally annotated with the
/// eventual period of the orbit that produced it.
struct BitString {
  std::vector<std::uint8_t> bits;
  /// Length of the repeating block, when known.
  std::optional<std::size_t> period;
  /// Number of bits before the repeating block starts.
  std::optional<std::size_t> preperiod;

  static BitString parse(std::string_view text);
  [[nodiscard]] std::string str() const;
  /// Bracket form, e.g. "[001]" or "1[0]".
  [[nodiscard]] std::string bracketed() const;

  friend bool operator==(const BitString& a, const BitString& b) { return a.bits == b.bits; }
};

/// Orbit steps beyond the requested length that are scanned for a repeat
/// before the period is reported as unknown.
inline constexpr std::size_t kPeriodSearchLimit = 1U << 16U;

/// a_k = floor(2 r_{k-1}), r_k = 2 r_{k-1} - a_k, exactly, for k = 1..n.
/// Throws DomainError unless 0 <= r0 < 1 and n >= 1.
[[nodiscard]] BitString generate_bits(const Rational& r0, std::size_t n);

/// r_0, r_1, ..., r_n.
[[nodiscard]] std::vector<Rational> doubling_orbit(const Rational& r0, std::size_t n);

enum class SeedReading {
  Finite,    ///< 0.a_1...a_n, terminating
  Periodic,  ///< the last `period` bits repeat forever
};

/// Inverse of generate_bits. Periodic reading needs b.period.
[[nodiscard]] Rational seed_from_bits(const BitString& b, SeedReading reading = SeedReading::Finite);

}  // namespace invset::detgen
