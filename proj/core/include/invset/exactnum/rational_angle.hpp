#pragma once

#include <string>
#include <string_view>

#include "invset/exactnum/rational.hpp"

namespace invset::exactnum {

/// An angle held as an exact fraction of a full turn, reduced into [0, 1).
/// Radians are 2*pi*turns and are never materialised.
class RationalAngle {
 public:
  RationalAngle() = default;
  explicit RationalAngle(const Rational& turns);

  static RationalAngle parse(std::string_view text) { return RationalAngle(Rational::parse(text)); }

  [[nodiscard]] const Rational& turns() const { return turns_; }

  /// Twice the angle, reduced.
  [[nodiscard]] RationalAngle doubled() const { return RationalAngle(turns_ * 2); }

  /// Sign of cos(2*pi*turns): +1 on [0, 1/4) and (3/4, 1), 0 at 1/4 and 3/4,
  /// -1 on (1/4, 3/4). Exact.
  [[nodiscard]] int cos_sign() const;

  [[nodiscard]] std::string str() const { return turns_.str(); }

  friend RationalAngle operator+(const RationalAngle& a, const RationalAngle& b) {
    return RationalAngle(a.turns_ + b.turns_);
  }
  friend RationalAngle operator-(const RationalAngle& a, const RationalAngle& b) {
    return RationalAngle(a.turns_ - b.turns_);
  }
  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;

 private:
  Rational turns_;
};

}  // namespace invset::exactnum
