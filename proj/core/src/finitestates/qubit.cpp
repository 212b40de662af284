#include "invset/finitestates/qubit.hpp"

#include "invset/errors.hpp"

namespace invset::finitestates {

FiniteHilbertState FiniteQubit::to_state() const {
  return FiniteHilbertState(N_, {Amplitude{n1_, RationalAngle()}, Amplitude{N_ - n1_, phi_}});
}

FiniteQubit make_finite_qubit(const Rational& cos_theta, const RationalAngle& phi, std::uint64_t N) {
  if (N < 2) throw DomainError("finite qubit needs N >= 2, got " + std::to_string(N));
  if (cos_theta < Rational(-1) || cos_theta > Rational(1)) {
    throw DomainError("cos(theta) = " + cos_theta.str() + " outside [-1, 1]");
  }
  const exactnum::BigInt bigN(N);
  const Rational scaled = (Rational(1) + cos_theta) / Rational(2) * Rational(bigN);
  if (!scaled.is_integer()) {
    throw DomainError("squared modulus: (1 + cos theta)/2 = " + ((Rational(1) + cos_theta) / Rational(2)).str() +
                      " is not a multiple of 1/" + std::to_string(N));
  }
  if (bigN % phi.turns().den() != 0) {
    throw DomainError("phase: phi/2pi = " + phi.str() + " is not a multiple of 1/" + std::to_string(N));
  }
  return FiniteQubit(cos_theta, phi, N, scaled.num().convert_to<std::uint64_t>());
}

}  // namespace invset::finitestates
