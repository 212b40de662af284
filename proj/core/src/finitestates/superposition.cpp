#include "invset/finitestates/superposition.hpp"

namespace invset::finitestates {

SuperpositionResult superpose_classify(const RationalAngle& phi1, const RationalAngle& phi2) {
  SuperpositionResult r;
  // Both turns lie in [0, 1), so the half-sum does too and needs no reduction.
  r.phi4 = RationalAngle((phi1.turns() + phi2.turns()) / Rational(2));

  const CosineClass c = exactnum::niven_classify(phi1 - phi2);
  if (!c.is_rational()) return r;

  const Rational cos_sq = Rational(2) / (Rational(3) + c.value());
  r.cos_sq_half_phi3 = CosineClass::rational(cos_sq);
  r.cos_theta3 = Rational(2) * cos_sq - Rational(1);
  r.finite = true;
  return r;
}

}  // namespace invset::finitestates
