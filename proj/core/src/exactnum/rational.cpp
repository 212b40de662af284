#include "invset/exactnum/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "invset/errors.hpp"

namespace invset::exactnum {

namespace mp = boost::multiprecision;

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigInt parse_integer(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) {
    throw ParseError("not an exact rational: '" + std::string(whole) + "' (expected p/q or an integer)");
  }
  BigInt v{std::string(text)};
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(value) {}

Rational::Rational(BigInt value) : value_(std::move(value)) {}

Rational::Rational(BigInt num, BigInt den) {
  if (den.is_zero()) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  value_ = Storage(std::move(num), std::move(den));
}

Rational Rational::parse(std::string_view text) {
  if (text.find_first_of(".eE") != std::string_view::npos) {
    throw ParseError("decimal input '" + std::string(text) +
                     "' is not accepted; write it as an exact fraction, e.g. 0.25 -> 1/4");
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  const auto den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw ParseError("not an exact rational: '" + std::string(text) + "' (denominator must be a positive integer)");
  }
  BigInt den{std::string(den_text)};
  if (den.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(std::move(num), std::move(den));
}

BigInt Rational::num() const { return mp::numerator(value_); }
BigInt Rational::den() const { return mp::denominator(value_); }

bool Rational::is_integer() const { return mp::denominator(value_) == 1; }

Rational Rational::abs() const { return Rational(Storage(mp::abs(value_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  return Rational(den(), num());
}

BigInt Rational::floor() const {
  BigInt n = num();
  const BigInt d = den();
  BigInt q = n / d;  // truncates toward zero
  if (n.sign() < 0 && q * d != n) --q;
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

std::string Rational::str() const {
  if (is_integer()) return num().str();
  return num().str() + "/" + den().str();
}

std::string Rational::decimal(unsigned significant) const {
  using Dec = mp::number<mp::cpp_dec_float<60>>;
  const Dec v = Dec(num()) / Dec(den());
  return v.str(significant);
}

double Rational::to_double() const { return static_cast<double>(value_); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational operator-(const Rational& x) { return Rational(Rational::Storage(-x.value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = a.value_.compare(b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt isqrt(const BigInt& n) {
  if (n.sign() < 0) throw DomainError("isqrt of a negative integer");
  return mp::sqrt(n);
}

std::optional<Rational> is_perfect_square(const Rational& r) {
  if (r.sign() < 0) throw DomainError("perfect-square test on negative value " + r.str());
  const BigInt n = r.num();
  const BigInt d = r.den();
  const BigInt rn = isqrt(n);
  if (rn * rn != n) return std::nullopt;
  const BigInt rd = isqrt(d);
  if (rd * rd != d) return std::nullopt;
  return Rational(rn, rd);
}

Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) return pow(base.reciprocal(), -exponent);
  Rational result(1);
  Rational b = base;
  auto e = static_cast<std::uint64_t>(exponent);
  while (e != 0) {
    if ((e & 1U) != 0) result *= b;
    b *= b;
    e >>= 1U;
  }
  return result;
}

}  // namespace invset::exactnum
