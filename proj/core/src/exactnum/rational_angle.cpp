#include "invset/exactnum/rational_angle.hpp"

namespace invset::exactnum {

RationalAngle::RationalAngle(const Rational& turns) : turns_(turns.frac()) {}

int RationalAngle::cos_sign() const {
  static const Rational quarter(1, 4);
  static const Rational three_quarters(3, 4);
  if (turns_ == quarter || turns_ == three_quarters) return 0;
  return (turns_ > quarter && turns_ < three_quarters) ? -1 : 1;
}

}  // namespace invset::exactnum
