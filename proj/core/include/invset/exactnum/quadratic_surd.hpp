#pragma once

#include <cstdint>
#include <string>

#include "invset/exactnum/rational.hpp"

namespace invset::exactnum {

/// a + b*sqrt(d) with rational a, b and square-free d >= 1.
///
/// Canonical form: d == 1 exactly when b == 0, so a purely rational value is
/// always stored as (a, 0, 1). Equality is structural on the canonical form.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational rational);  // NOLINT(google-explicit-constructor)
  /// Canonicalises: square factors of `radicand` move into the coefficient.
  QuadraticSurd(Rational rational, Rational coeff, BigInt radicand);

  /// sqrt(r) as a surd; throws DomainError when r < 0.
  static QuadraticSurd sqrt(const Rational& r);

  [[nodiscard]] const Rational& rational_part() const { return rat_; }
  [[nodiscard]] const Rational& coeff() const { return coeff_; }
  [[nodiscard]] const BigInt& radicand() const { return radicand_; }
  [[nodiscard]] bool is_rational() const { return coeff_.is_zero(); }

  [[nodiscard]] QuadraticSurd conjugate() const;
  /// (a + b sqrt d)(a - b sqrt d) = a^2 - b^2 d.
  [[nodiscard]] Rational norm() const;
  [[nodiscard]] long double to_long_double() const;
  [[nodiscard]] std::string str() const;

  friend QuadraticSurd operator-(const QuadraticSurd& x);
  /// Addition requires compatible radicands, like multiplication.
  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

 private:
  Rational rat_;
  Rational coeff_;
  BigInt radicand_{1};
};

/// Exact product. Both operands must share a radicand unless one of them is
/// rational; throws DomainError on mixed radicands.
[[nodiscard]] QuadraticSurd surd_mul(const QuadraticSurd& x, const QuadraticSurd& y);

/// Splits n = k^2 * d with d square-free. Returns {k, d}. n must be > 0.
[[nodiscard]] std::pair<BigInt, BigInt> split_square_factor(const BigInt& n);

}  // namespace invset::exactnum
