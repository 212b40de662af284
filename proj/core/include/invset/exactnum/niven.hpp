#pragma once

#include <optional>
#include <string>

#include "invset/exactnum/rational.hpp"
#include "invset/exactnum/rational_angle.hpp"

namespace invset::exactnum {

/// Either the exact rational value of a cosine or the marker "irrational".
class CosineClass {
 public:
  static CosineClass rational(Rational value) { return CosineClass(std::move(value)); }
  static CosineClass irrational() { return CosineClass(); }

  [[nodiscard]] bool is_rational() const { return value_.has_value(); }
  /// Precondition: is_rational().
  [[nodiscard]] const Rational& value() const { return *value_; }
  [[nodiscard]] const std::optional<Rational>& maybe_value() const { return value_; }
  [[nodiscard]] std::string str() const { return value_ ? value_->str() : "irrational"; }

  friend bool operator==(const CosineClass&, const CosineClass&) = default;

 private:
  CosineClass() = default;
  explicit CosineClass(Rational v) : value_(std::move(v)) {}
  std::optional<Rational> value_;
};

/// Decides whether cos(2*pi*turns) is rational. For rational turns the only
/// rational cosines are 0, +-1/2 and +-1, reached at reduced denominators
/// 1, 2, 3, 4 and 6; everything else is irrational.
[[nodiscard]] CosineClass niven_classify(const RationalAngle& angle);

}  // namespace invset::exactnum
