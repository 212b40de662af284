#pragma once

#include <array>

#include "invset/exactnum/rational.hpp"

namespace invset::bellsim {

/// A deterministic local hidden-variable assignment: every setting has a
/// predetermined +-1 outcome.
struct DeterministicStrategy {
  int A0 = 1;
  int A1 = 1;
  int B0 = 1;
  int B1 = 1;

  /// A0 B0 + A0 B1 + A1 B0 - A1 B1.
  [[nodiscard]] int chsh() const { return A0 * B0 + A0 * B1 + A1 * B0 - A1 * B1; }
};

/// All 16 assignments in lexicographic bit order (A0, A1, B0, B1).
[[nodiscard]] std::array<DeterministicStrategy, 16> deterministic_strategies();

/// Maximum of chsh() over all deterministic strategies. Every mixture is a
/// convex combination of these, so this bounds every local model.
[[nodiscard]] exactnum::Rational classical_chsh_max();
[[nodiscard]] exactnum::Rational classical_chsh_min();

}  // namespace invset::bellsim
