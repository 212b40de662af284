#include "invset/bellsim/spin_oracle.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace invset::bellsim {

namespace {

using Eigen::Matrix2cd;
using Eigen::Matrix4cd;
using Eigen::Vector2cd;
using Eigen::Vector4cd;

constexpr Complex kI{0.0, 1.0};

Matrix2cd pauli_dot(const std::array<double, 3>& n) {
  Matrix2cd m;
  m << n[2], Complex(n[0], -n[1]), Complex(n[0], n[1]), -n[2];
  return m;
}

Matrix2 to_array(const Matrix2cd& m) { return {{{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}}; }
Vector2 to_array(const Vector2cd& v) { return {v(0), v(1)}; }

SpinOperator make_operator(const std::array<double, 3>& n) {
  SpinOperator op;
  op.direction = n;
  const Matrix2cd m = pauli_dot(n);
  op.matrix = to_array(m);

  // Polar/azimuthal form: +1 -> (cos t/2, e^{i phi} sin t/2),
  //                       -1 -> (sin t/2, -e^{i phi} cos t/2).
  const double polar = std::acos(std::clamp(n[2], -1.0, 1.0));
  const double azimuth = std::atan2(n[1], n[0]);
  const Complex phase = std::exp(kI * azimuth);
  const double c = std::cos(polar / 2.0);
  const double s = std::sin(polar / 2.0);
  const Vector2cd up(c, phase * s);
  const Vector2cd down(s, -phase * c);

  op.eigen = {Eigenpair{1.0, to_array(up)}, Eigenpair{-1.0, to_array(down)}};
  op.max_residual = std::max((m * up - up).norm(), (m * down + down).norm());
  return op;
}

double singlet_expectation(const Matrix2cd& a, const Matrix2cd& b) {
  Matrix4cd kron;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) kron.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  }
  const double r = 1.0 / std::sqrt(2.0);
  const Vector4cd psi(0.0, r, -r, 0.0);  // (|01> - |10>)/sqrt2
  return (psi.adjoint() * kron * psi)(0).real();
}

}  // namespace

SpinOracleResult spin_operator_oracle(double theta_x0x1, double theta_x0y0, double gamma) {
  const std::array<double, 3> x0{0.0, 0.0, 1.0};
  const std::array<double, 3> x1{0.0, std::sin(theta_x0x1), std::cos(theta_x0x1)};
  const std::array<double, 3> y0{std::sin(theta_x0y0) * std::sin(gamma), std::sin(theta_x0y0) * std::cos(gamma),
                                 std::cos(theta_x0y0)};
  SpinOracleResult r;
  r.x0 = make_operator(x0);
  r.x1 = make_operator(x1);
  r.y0 = make_operator(y0);
  const auto a0 = pauli_dot(x0);
  const auto a1 = pauli_dot(x1);
  const auto b0 = pauli_dot(y0);
  r.expectation_x0_y0 = singlet_expectation(a0, b0);
  r.expectation_x1_y0 = singlet_expectation(a1, b0);
  r.expectation_x0_x1 = singlet_expectation(a0, a1);
  return r;
}

}  // namespace invset::bellsim
