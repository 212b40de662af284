#include "invset/bellsim/settings.hpp"

#include "invset/errors.hpp"

namespace invset::bellsim {

using exactnum::BigInt;

void validate_settings(const MeasurementSettings& s) {
  if (s.N < 2) throw DomainError("settings need N >= 2, got " + std::to_string(s.N));
  for (const auto c : ontology::kAllContexts) {
    const Rational& v = s.cosine(c);
    if (v < Rational(-1) || v > Rational(1)) {
      throw DomainError("cos theta_" + c.str() + " = " + v.str() + " outside [-1, 1]");
    }
    if (BigInt(s.N) % v.den() != 0) {
      throw DomainError("cos theta_" + c.str() + " = " + v.str() + " is not a multiple of 1/" + std::to_string(s.N));
    }
  }
}

Rational singlet_correlation(const Rational& cos_theta) {
  if (cos_theta < Rational(-1) || cos_theta > Rational(1)) {
    throw DomainError("cos theta = " + cos_theta.str() + " outside [-1, 1]");
  }
  return -cos_theta;
}

Rational rational_cos_approx(const Rational& target_square, int sign, std::uint64_t N) {
  if (target_square < Rational(0) || target_square > Rational(1)) {
    throw DomainError("target square " + target_square.str() + " outside [0, 1]");
  }
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  if (N < 2) throw DomainError("approximation needs N >= 2");

  const BigInt bigN(N);
  // Distance to N*sqrt(t) is compared through squares: n0 wins unless
  // N^2 t lies strictly above (n0 + 1/2)^2.
  const Rational scaled = target_square * Rational(bigN * bigN);
  BigInt n = exactnum::isqrt(scaled.floor());
  const Rational midpoint_sq = Rational(2 * n + 1, 2) * Rational(2 * n + 1, 2);
  if (scaled > midpoint_sq) ++n;
  return Rational(sign * n, bigN);
}

MeasurementSettings auto_tsirelson_settings(std::uint64_t N) {
  const Rational c = rational_cos_approx(Rational(1, 2), 1, N);
  return MeasurementSettings{N, {c, c, c, -c}};
}

}  // namespace invset::bellsim
