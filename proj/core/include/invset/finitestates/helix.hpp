#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "invset/finitestates/qubit.hpp"

namespace invset::finitestates {

/// N equally weighted trajectory segments of the fractal helix, each
/// labelled 0 or 1. Labels are ordered zeros first.
struct HelixEnsemble {
  std::uint64_t N = 0;
  std::vector<std::uint8_t> labels;

  [[nodiscard]] Rational weight() const { return Rational(exactnum::BigInt(1), exactnum::BigInt(N)); }
};

[[nodiscard]] HelixEnsemble helix_ensemble(const FiniteQubit& q);

/// (fraction labelled 0, fraction labelled 1).
[[nodiscard]] std::pair<Rational, Rational> ensemble_statistics(const HelixEnsemble& h);

}  // namespace invset::finitestates
