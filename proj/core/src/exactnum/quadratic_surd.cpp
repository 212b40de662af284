#include "invset/exactnum/quadratic_surd.hpp"

#include <cmath>

#include "invset/errors.hpp"

namespace invset::exactnum {

std::pair<BigInt, BigInt> split_square_factor(const BigInt& n) {
  if (n.sign() <= 0) throw DomainError("square-free split needs a positive integer");
  BigInt k = 1;
  BigInt d = n;
  // Trial division is fine here: radicands come from products of small
  // denominators and numerators.
  for (BigInt p = 2; p * p <= d; ++p) {
    const BigInt sq = p * p;
    while (d % sq == 0) {
      d /= sq;
      k *= p;
    }
  }
  return {k, d};
}

QuadraticSurd::QuadraticSurd(Rational rational) : rat_(std::move(rational)) {}

QuadraticSurd::QuadraticSurd(Rational rational, Rational coeff, BigInt radicand)
    : rat_(std::move(rational)), coeff_(std::move(coeff)) {
  if (radicand.sign() <= 0) throw DomainError("surd radicand must be a positive integer");
  auto [k, d] = split_square_factor(radicand);
  coeff_ *= Rational(k);
  if (d == 1) {
    rat_ += coeff_;
    coeff_ = Rational(0);
  }
  radicand_ = coeff_.is_zero() ? BigInt(1) : d;
}

QuadraticSurd QuadraticSurd::sqrt(const Rational& r) {
  if (r.sign() < 0) throw DomainError("square root of negative value " + r.str());
  if (r.is_zero()) return QuadraticSurd(Rational(0));
  // sqrt(n/d) = sqrt(n*d)/d
  return QuadraticSurd(Rational(0), Rational(BigInt(1), r.den()), r.num() * r.den());
}

QuadraticSurd QuadraticSurd::conjugate() const { return QuadraticSurd(rat_, -coeff_, radicand_); }

Rational QuadraticSurd::norm() const { return rat_ * rat_ - coeff_ * coeff_ * Rational(radicand_); }

long double QuadraticSurd::to_long_double() const {
  return static_cast<long double>(rat_.to_double()) +
         static_cast<long double>(coeff_.to_double()) * std::sqrt(static_cast<long double>(radicand_));
}

std::string QuadraticSurd::str() const {
  if (is_rational()) return rat_.str();
  return rat_.str() + " + (" + coeff_.str() + ")*sqrt(" + radicand_.str() + ")";
}

namespace {

BigInt common_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.is_rational()) return y.radicand();
  if (y.is_rational() || x.radicand() == y.radicand()) return x.radicand();
  throw DomainError("incompatible radicands sqrt(" + x.radicand().str() + ") and sqrt(" + y.radicand().str() + ")");
}

}  // namespace

QuadraticSurd operator-(const QuadraticSurd& x) { return QuadraticSurd(-x.rat_, -x.coeff_, x.radicand_); }

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
  const BigInt d = common_radicand(x, y);
  return QuadraticSurd(x.rat_ + y.rat_, x.coeff_ + y.coeff_, d);
}

QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) { return x + (-y); }

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
  const BigInt d = common_radicand(x, y);
  const Rational dr(d);
  // (a + b r)(c + e r) = (ac + be d) + (ae + bc) r
  return QuadraticSurd(x.rat_ * y.rat_ + x.coeff_ * y.coeff_ * dr, x.rat_ * y.coeff_ + x.coeff_ * y.rat_, d);
}

QuadraticSurd surd_mul(const QuadraticSurd& x, const QuadraticSurd& y) { return x * y; }

}  // namespace invset::exactnum
