#include "invset/exactnum/padic.hpp"

#include <algorithm>

#include "invset/errors.hpp"

namespace invset::exactnum {

DigitString::DigitString(std::uint32_t base, std::vector<std::uint32_t> digits)
    : base_(base), digits_(std::move(digits)) {
  if (base_ < 2) throw DomainError("digit-string base must be at least 2");
  if (digits_.empty()) throw DomainError("digit string must be non-empty");
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] >= base_) {
      throw DomainError("digit " + std::to_string(digits_[i]) + " at position " + std::to_string(i + 1) +
                        " is not below base " + std::to_string(base_));
    }
  }
}

DigitString DigitString::parse(std::uint32_t base, std::string_view text) {
  std::vector<std::uint32_t> digits;
  digits.reserve(text.size());
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      digits.push_back(static_cast<std::uint32_t>(c - '0'));
    } else if (c >= 'a' && c <= 'z') {
      digits.push_back(static_cast<std::uint32_t>(c - 'a' + 10));
    } else if (c >= 'A' && c <= 'Z') {
      digits.push_back(static_cast<std::uint32_t>(c - 'A' + 10));
    } else {
      throw ParseError(std::string("invalid digit '") + c + "' in digit string");
    }
  }
  return DigitString(base, std::move(digits));
}

DigitString DigitString::padded(std::size_t length) const {
  auto d = digits_;
  if (d.size() < length) d.resize(length, 0);
  return DigitString(base_, std::move(d));
}

std::string DigitString::str() const {
  std::string s;
  s.reserve(digits_.size());
  for (auto d : digits_) s.push_back(d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10));
  return s;
}

Rational ultrametric_distance(const DigitString& a, const DigitString& b) {
  if (a.base() != b.base()) {
    throw DomainError("ultrametric distance between bases " + std::to_string(a.base()) + " and " +
                      std::to_string(b.base()));
  }
  if (a.size() != b.size()) throw DomainError("ultrametric distance needs equal-length strings; pad first");
  const auto da = a.digits();
  const auto db = b.digits();
  const auto mismatch = std::mismatch(da.begin(), da.end(), db.begin());
  if (mismatch.first == da.end()) return Rational(0);
  const auto k = static_cast<std::int64_t>(mismatch.first - da.begin()) + 1;
  return pow(Rational(static_cast<std::int64_t>(a.base())), -k);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f <= n / f; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

namespace {

std::int64_t strip_factor(BigInt& n, const BigInt& p) {
  std::int64_t count = 0;
  while (n % p == 0) {
    n /= p;
    ++count;
  }
  return count;
}

}  // namespace

std::optional<std::int64_t> padic_valuation(const Rational& x, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("p-adic valuation needs a prime p, got " + std::to_string(p));
  if (x.is_zero()) return std::nullopt;
  const BigInt bp(p);
  BigInt n = x.num();
  if (n.sign() < 0) n = -n;
  BigInt d = x.den();
  return strip_factor(n, bp) - strip_factor(d, bp);
}

Rational padic_norm(const Rational& x, std::uint64_t p) {
  const auto v = padic_valuation(x, p);
  if (!v) return Rational(0);
  return pow(Rational(static_cast<std::int64_t>(p)), -*v);
}

}  // namespace invset::exactnum
