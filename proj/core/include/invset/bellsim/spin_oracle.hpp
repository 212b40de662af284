#pragma once

#include <array>
#include <complex>

namespace invset::bellsim {

using Complex = std::complex<double>;
using Matrix2 = std::array<std::array<Complex, 2>, 2>;
using Vector2 = std::array<Complex, 2>;

struct Eigenpair {
  double value = 0.0;
  Vector2 vector{};
};

/// Spin operator sigma.n for one measurement direction with its two
/// eigenpairs (+1 first).
struct SpinOperator {
  std::array<double, 3> direction{};
  Matrix2 matrix{};
  std::array<Eigenpair, 2> eigen{};
  double max_residual = 0.0;  ///< max ||M v - lambda v||
};

/// Floating-point reference for the singlet correlation. Directions:
/// X=0 along z, X=1 at angle theta_x0x1 in the y-z plane, Y=0 at angle
/// theta_x0y0 from z with internal angle gamma at X=0.
struct SpinOracleResult {
  SpinOperator x0;
  SpinOperator x1;
  SpinOperator y0;
  /// <psi|(sigma.a)(x)(sigma.b)|psi> on the singlet.
  double expectation_x0_y0 = 0.0;
  double expectation_x1_y0 = 0.0;
  double expectation_x0_x1 = 0.0;
};

[[nodiscard]] SpinOracleResult spin_operator_oracle(double theta_x0x1, double theta_x0y0, double gamma);

/// Both sides at the same polar angle theta.
[[nodiscard]] inline SpinOracleResult spin_operator_oracle(double theta, double gamma) {
  return spin_operator_oracle(theta, theta, gamma);
}

}  // namespace invset::bellsim
