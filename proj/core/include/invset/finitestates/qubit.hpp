#pragma once

#include <cstdint>

#include "invset/exactnum/rational.hpp"
#include "invset/finitestates/finite_state.hpp"

namespace invset::finitestates {

using exactnum::Rational;

/// cos(theta/2)|0> + sin(theta/2) e^{i phi}|1> with cos^2(theta/2) = n1/N and
/// phi a multiple of 1/N turn.
class FiniteQubit {
 public:
  [[nodiscard]] const Rational& cos_theta() const { return cos_theta_; }
  [[nodiscard]] const RationalAngle& phi() const { return phi_; }
  [[nodiscard]] std::uint64_t N() const { return N_; }
  /// Integer numerator of cos^2(theta/2) over N.
  [[nodiscard]] std::uint64_t n1() const { return n1_; }

  /// Two-entry embedding: (n1, 0) and (N - n1, phi).
  [[nodiscard]] FiniteHilbertState to_state() const;

  friend FiniteQubit make_finite_qubit(const Rational& cos_theta, const RationalAngle& phi, std::uint64_t N);

 private:
  FiniteQubit(Rational cos_theta, RationalAngle phi, std::uint64_t N, std::uint64_t n1)
      : cos_theta_(std::move(cos_theta)), phi_(std::move(phi)), N_(N), n1_(n1) {}

  Rational cos_theta_;
  RationalAngle phi_;
  std::uint64_t N_;
  std::uint64_t n1_;
};

/// Throws DomainError naming the failed condition when (1 + cos_theta)/2 is
/// not a multiple of 1/N, when phi is not a multiple of 1/N turn, or when
/// cos_theta lies outside [-1, 1].
[[nodiscard]] FiniteQubit make_finite_qubit(const Rational& cos_theta, const RationalAngle& phi, std::uint64_t N);

}  // namespace invset::finitestates
