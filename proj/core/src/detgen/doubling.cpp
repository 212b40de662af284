#include "invset/detgen/doubling.hpp"

#include <map>

#include "invset/errors.hpp"

namespace invset::detgen {

using exactnum::BigInt;

BitString BitString::parse(std::string_view text) {
  BitString b;
  for (char c : text) {
    if (c != '0' && c != '1') throw ParseError(std::string("invalid bit '") + c + "'");
    b.bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  if (b.bits.empty()) throw ParseError("empty bit string");
  return b;
}

std::string BitString::str() const {
  std::string s;
  s.reserve(bits.size());
  for (auto bit : bits) s.push_back(static_cast<char>('0' + bit));
  return s;
}

std::string BitString::bracketed() const {
  if (!period || !preperiod) return str();
  std::string s;
  for (std::size_t i = 0; i < *preperiod && i < bits.size(); ++i) s.push_back(static_cast<char>('0' + bits[i]));
  s.push_back('[');
  for (std::size_t i = 0; i < *period; ++i) {
    const auto k = *preperiod + i;
    s.push_back(k < bits.size() ? static_cast<char>('0' + bits[k]) : '?');
  }
  s.push_back(']');
  return s;
}

namespace {

void check_seed(const Rational& r0) {
  if (r0 < Rational(0) || r0 >= Rational(1)) throw DomainError("seed " + r0.str() + " outside [0, 1)");
}

}  // namespace

BitString generate_bits(const Rational& r0, std::size_t n) {
  check_seed(r0);
  if (n == 0) throw DomainError("bit string length must be at least 1");

  // r_k = state_k / den with integer state; the denominator stays fixed.
  const BigInt den = r0.den();
  BigInt state = r0.num();
  std::map<BigInt, std::size_t> seen;

  BitString out;
  out.bits.reserve(n);
  const std::size_t limit = n + kPeriodSearchLimit;
  for (std::size_t k = 0; k < limit; ++k) {
    if (!out.period) {
      const auto [it, fresh] = seen.emplace(state, k);
      if (!fresh) {
        out.preperiod = it->second;
        out.period = k - it->second;
        if (k >= n) break;
      }
    } else if (k >= n) {
      break;
    }
    state *= 2;
    const bool one = state >= den;
    if (one) state -= den;
    if (k < n) out.bits.push_back(one ? 1 : 0);
  }
  return out;
}

std::vector<Rational> doubling_orbit(const Rational& r0, std::size_t n) {
  check_seed(r0);
  std::vector<Rational> orbit{r0};
  orbit.reserve(n + 1);
  Rational r = r0;
  for (std::size_t k = 0; k < n; ++k) {
    r = (r * Rational(2)).frac();
    orbit.push_back(r);
  }
  return orbit;
}

Rational seed_from_bits(const BitString& b, SeedReading reading) {
  if (b.bits.empty()) throw DomainError("empty bit string");

  const auto value_of = [](auto first, auto last) {
    BigInt v = 0;
    for (auto it = first; it != last; ++it) v = 2 * v + *it;
    return v;
  };

  const std::size_t len = b.bits.size();
  if (reading == SeedReading::Finite) {
    return Rational(value_of(b.bits.begin(), b.bits.end()), BigInt(1) << len);
  }

  if (!b.period || *b.period == 0 || *b.period > len) {
    throw DomainError("periodic reading needs a period between 1 and the string length");
  }
  const std::size_t p = *b.period;
  const std::size_t pre = len - p;
  const auto split = b.bits.begin() + static_cast<std::ptrdiff_t>(pre);
  // 0.prefix[block] = prefix/2^pre + block/(2^pre (2^p - 1))
  const Rational prefix(value_of(b.bits.begin(), split), BigInt(1) << pre);
  const Rational block(value_of(split, b.bits.end()), (BigInt(1) << pre) * ((BigInt(1) << p) - 1));
  const Rational r = prefix + block;
  return r.frac();  // an all-ones block reads as 1 and wraps to 0
}

}  // namespace invset::detgen
