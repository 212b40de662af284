#pragma once

#include <array>
#include <cstdint>

#include "invset/exactnum/rational.hpp"
#include "invset/ontology/context.hpp"

namespace invset::bellsim {

using exactnum::Rational;
using ontology::ContextPair;

/// Target cos(theta_XY) for each of the four contexts, indexed by
/// ContextPair::index(). Every cosine must be a multiple of 1/N.
struct MeasurementSettings {
  std::uint64_t N = 2;
  std::array<Rational, 4> cosines;

  [[nodiscard]] const Rational& cosine(ContextPair c) const { return cosines[c.index()]; }
};

/// Throws DomainError when a cosine leaves [-1, 1] or its denominator does
/// not divide N.
void validate_settings(const MeasurementSettings& s);

/// Singlet expectation <(sigma.a)(sigma.b)> = -cos(theta).
[[nodiscard]] Rational singlet_correlation(const Rational& cos_theta);

/// n/N closest to sign*sqrt(target_square). Ties go to the smaller |n|.
[[nodiscard]] Rational rational_cos_approx(const Rational& target_square, int sign, std::uint64_t N);

/// All four |cos| equal to the best n/N approximation of sqrt(1/2), with
/// signs (+, +, +, -) on contexts 00, 01, 10, 11.
[[nodiscard]] MeasurementSettings auto_tsirelson_settings(std::uint64_t N);

}  // namespace invset::bellsim
