#pragma once

// Test-only oracle for rational cosines of rational angles. It never looks at
// the Niven table: it builds the minimal polynomial of cos(2 pi / q) from the
// q-th cyclotomic polynomial and applies the rational root theorem.

#include <cstdint>
#include <optional>
#include <vector>

#include "invset/exactnum/rational.hpp"

namespace invset::oracles {

using exactnum::BigInt;
using exactnum::Rational;

/// Integer polynomial, coefficient i multiplies x^i.
using IntPoly = std::vector<BigInt>;

[[nodiscard]] IntPoly cyclotomic(std::uint64_t n);

/// Integer polynomial with cos(2 pi k / q) as roots for every k coprime to q,
/// of degree max(1, phi(q)/2): psi_q(2x) where psi_q is the minimal
/// polynomial of 2 cos(2 pi / q).
[[nodiscard]] IntPoly minimal_cos_polynomial(std::uint64_t q);

/// All rational roots, ascending, via the rational root theorem.
[[nodiscard]] std::vector<Rational> rational_roots(const IntPoly& p);

[[nodiscard]] Rational evaluate(const IntPoly& p, const Rational& x);

/// Exact value of cos(2 pi p / q) if rational, for reduced p/q with q >= 1.
[[nodiscard]] std::optional<Rational> oracle_rational_cos(std::int64_t p, std::uint64_t q);

}  // namespace invset::oracles
