#include <cmath>
#include <numbers>
#include <numeric>

#include <gtest/gtest.h>

#include "invset/exactnum/niven.hpp"
#include "oracles/niven_oracle.hpp"

namespace invset::oracles {
namespace {

TEST(NivenOracle, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic(1), (IntPoly{-1, 1}));
  EXPECT_EQ(cyclotomic(4), (IntPoly{1, 0, 1}));
  EXPECT_EQ(cyclotomic(6), (IntPoly{1, -1, 1}));
  EXPECT_EQ(cyclotomic(5), (IntPoly{1, 1, 1, 1, 1}));
}

TEST(NivenOracle, MinimalPolynomialOfCosTwoPiOverFive) {
  // 4x^2 + 2x - 1
  EXPECT_EQ(minimal_cos_polynomial(5), (IntPoly{-1, 2, 4}));
  EXPECT_TRUE(rational_roots(minimal_cos_polynomial(5)).empty());
}

TEST(NivenOracle, PolynomialVanishesAtCosine) {
  for (std::uint64_t q = 1; q <= 60; ++q) {
    const auto poly = minimal_cos_polynomial(q);
    double acc = 0;
    const double c = std::cos(2.0 * std::numbers::pi / static_cast<double>(q));
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * c + it->convert_to<double>();
    EXPECT_NEAR(acc, 0.0, 1e-6) << "q = " << q;
  }
}

TEST(NivenOracle, AgreesWithClassifierUpTo60) {
  int disagreements = 0;
  for (std::uint64_t q = 1; q <= 60; ++q) {
    for (std::uint64_t p = 0; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const auto oracle = oracle_rational_cos(static_cast<std::int64_t>(p), q);
      const auto actual = exactnum::niven_classify(
          exactnum::RationalAngle(exactnum::Rational(static_cast<std::int64_t>(p)) / exactnum::Rational(static_cast<std::int64_t>(q))));
      if (oracle != actual.maybe_value()) {
        ++disagreements;
        ADD_FAILURE() << p << "/" << q;
      }
    }
  }
  EXPECT_EQ(disagreements, 0);
}

}  // namespace
}  // namespace invset::oracles
