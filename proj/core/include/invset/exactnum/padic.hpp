#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invset/exactnum/rational.hpp"

namespace invset::exactnum {

/// A finite base-N digit string: the address of a trajectory inside the
/// N-fold nested helix, read most significant digit first.
class DigitString {
 public:
  /// Throws DomainError if base < 2, digits is empty, or a digit >= base.
  DigitString(std::uint32_t base, std::vector<std::uint32_t> digits);

  /// Parses "0123" style text; digits beyond 9 use letters a-z.
  static DigitString parse(std::uint32_t base, std::string_view text);

  [[nodiscard]] std::uint32_t base() const { return base_; }
  [[nodiscard]] std::span<const std::uint32_t> digits() const { return digits_; }
  [[nodiscard]] std::size_t size() const { return digits_.size(); }

  /// Copy extended with trailing zeros up to `length` (no-op when shorter).
  [[nodiscard]] DigitString padded(std::size_t length) const;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const DigitString&, const DigitString&) = default;

 private:
  std::uint32_t base_;
  std::vector<std::uint32_t> digits_;
};

/// 0 for identical strings, otherwise base^-k with k the 1-based index of
/// the first differing digit. Both strings need the same base and length.
[[nodiscard]] Rational ultrametric_distance(const DigitString& a, const DigitString& b);

[[nodiscard]] bool is_prime(std::uint64_t n);

/// v_p(x). std::nullopt stands for +infinity (x == 0). Throws DomainError
/// when p is not prime.
[[nodiscard]] std::optional<std::int64_t> padic_valuation(const Rational& x, std::uint64_t p);

/// |x|_p = p^-v_p(x), and 0 for x == 0.
[[nodiscard]] Rational padic_norm(const Rational& x, std::uint64_t p);

}  // namespace invset::exactnum
