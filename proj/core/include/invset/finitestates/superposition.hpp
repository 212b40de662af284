#pragma once

#include <optional>

#include "invset/exactnum/niven.hpp"
#include "invset/exactnum/rational_angle.hpp"

namespace invset::finitestates {

using exactnum::CosineClass;
using exactnum::Rational;
using exactnum::RationalAngle;

/// Normalised sum of (|0> + e^{i phi1}|1>)/sqrt2 and (|0> + e^{i phi2}|1>)/sqrt2,
/// written as cos(phi3/2)|0> + sin(phi3/2) e^{i phi4}|1>.
struct SuperpositionResult {
  CosineClass cos_sq_half_phi3 = CosineClass::irrational();
  RationalAngle phi4;
  /// cos(theta3) = 2 cos^2(phi3/2) - 1 whenever the latter is rational.
  std::optional<Rational> cos_theta3;
  bool finite = false;
};

/// cos^2(phi3/2) = 2 / (3 + cos(phi1 - phi2)) and phi4 = (phi1 + phi2)/2.
[[nodiscard]] SuperpositionResult superpose_classify(const RationalAngle& phi1, const RationalAngle& phi2);

}  // namespace invset::finitestates
