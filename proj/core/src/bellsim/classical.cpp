#include "invset/bellsim/classical.hpp"

#include <algorithm>

#include "invset/bellsim/ensemble.hpp"

namespace invset::bellsim {

std::array<DeterministicStrategy, 16> deterministic_strategies() {
  std::array<DeterministicStrategy, 16> out{};
  for (unsigned bits = 0; bits < 16; ++bits) {
    out[bits] = DeterministicStrategy{spin_from_bit((bits >> 3U) & 1U), spin_from_bit((bits >> 2U) & 1U),
                                      spin_from_bit((bits >> 1U) & 1U), spin_from_bit(bits & 1U)};
  }
  return out;
}

exactnum::Rational classical_chsh_max() {
  const auto all = deterministic_strategies();
  const auto best = std::max_element(all.begin(), all.end(),
                                     [](const auto& a, const auto& b) { return a.chsh() < b.chsh(); });
  return exactnum::Rational(best->chsh());
}

exactnum::Rational classical_chsh_min() {
  const auto all = deterministic_strategies();
  const auto worst = std::min_element(all.begin(), all.end(),
                                      [](const auto& a, const auto& b) { return a.chsh() < b.chsh(); });
  return exactnum::Rational(worst->chsh());
}

}  // namespace invset::bellsim
