#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "invset/exactnum/rational.hpp"

namespace invset::ontology {

/// A joint measurement setting (X, Y), each a single bit.
struct ContextPair {
  std::uint8_t x = 0;
  std::uint8_t y = 0;

  /// (X†, Y†): both settings flipped.
  [[nodiscard]] ContextPair complement() const {
    return {static_cast<std::uint8_t>(x ^ 1U), static_cast<std::uint8_t>(y ^ 1U)};
  }
  /// Dense index 2x + y, used for fixed-size per-context tables.
  [[nodiscard]] std::size_t index() const { return 2U * x + y; }
  [[nodiscard]] std::string str() const { return std::string{static_cast<char>('0' + x), static_cast<char>('0' + y)}; }

  static ContextPair from_index(std::size_t i) {
    return {static_cast<std::uint8_t>(i >> 1U), static_cast<std::uint8_t>(i & 1U)};
  }

  friend auto operator<=>(const ContextPair&, const ContextPair&) = default;
};

inline constexpr std::array<ContextPair, 4> kAllContexts{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};

/// {(X, Y), (X†, Y†)}, ordered. The cross contexts (X, Y†) and (X†, Y) are
/// undefined for the same lambda.
[[nodiscard]] std::array<ContextPair, 2> admissible_contexts(ContextPair c);

[[nodiscard]] bool is_admissible(ContextPair realized, ContextPair queried);

/// p(lambda | queried) given p(lambda) and the realised context: the base
/// weight on the admissible pair, zero on the cross contexts.
[[nodiscard]] exactnum::Rational context_weight(const exactnum::Rational& base_weight, ContextPair realized,
                                                ContextPair queried);

}  // namespace invset::ontology
