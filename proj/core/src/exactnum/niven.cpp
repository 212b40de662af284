#include "invset/exactnum/niven.hpp"

namespace invset::exactnum {

CosineClass niven_classify(const RationalAngle& angle) {
  const Rational& t = angle.turns();
  const BigInt q = t.den();
  if (q == 1) return CosineClass::rational(Rational(1));                 // 0
  if (q == 2) return CosineClass::rational(Rational(-1));                // 1/2
  if (q == 4) return CosineClass::rational(Rational(0));                 // 1/4, 3/4
  if (q == 6) return CosineClass::rational(Rational(1, 2));              // 1/6, 5/6
  if (q == 3) return CosineClass::rational(Rational(-1, 2));             // 1/3, 2/3
  return CosineClass::irrational();
}

}  // namespace invset::exactnum
