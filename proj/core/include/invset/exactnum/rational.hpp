#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace invset::exactnum {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Zero is always 0/1. Arithmetic never rounds; values are immutable once
/// constructed apart from the compound-assignment operators.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  explicit Rational(BigInt value);
  /// Throws DomainError when `den` is zero.
  Rational(BigInt num, BigInt den);

  /// Parses "p/q" or an integer. Decimal and exponent notation are rejected.
  static Rational parse(std::string_view text);

  [[nodiscard]] BigInt num() const;
  [[nodiscard]] BigInt den() const;

  [[nodiscard]] bool is_zero() const { return value_.is_zero(); }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] int sign() const { return value_.sign(); }

  [[nodiscard]] Rational abs() const;
  [[nodiscard]] Rational reciprocal() const;
  [[nodiscard]] BigInt floor() const;
  /// Value minus its floor, in [0, 1).
  [[nodiscard]] Rational frac() const;

  /// "p/q", or just "p" when the denominator is one.
  [[nodiscard]] std::string str() const;
  /// Decimal rendering with `significant` significant digits.
  [[nodiscard]] std::string decimal(unsigned significant = 20) const;
  [[nodiscard]] double to_double() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x);

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  using Storage = boost::multiprecision::cpp_rational;
  explicit Rational(Storage v) : value_(std::move(v)) {}
  Storage value_{0};
};

/// Integer square root test. Returns q >= 0 with q*q == r when r is the
/// square of a rational; std::nullopt otherwise. Throws DomainError if r < 0.
[[nodiscard]] std::optional<Rational> is_perfect_square(const Rational& r);

/// floor(sqrt(n)) for n >= 0.
[[nodiscard]] BigInt isqrt(const BigInt& n);

[[nodiscard]] Rational pow(const Rational& base, std::int64_t exponent);

}  // namespace invset::exactnum
