#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "invset/exactnum/quadratic_surd.hpp"
#include "invset/exactnum/rational.hpp"
#include "invset/exactnum/rational_angle.hpp"

namespace invset::ontology {

using exactnum::QuadraticSurd;
using exactnum::Rational;
using exactnum::RationalAngle;

/// Triangle with vertices X=0, X=1, Y=0 on the unit sphere. Sides are held as
/// cosines because only the cosines are constrained to be rational.
struct SphericalTriangle {
  Rational cos_side_a;  ///< cos theta(X=0, Y=0)
  Rational cos_side_b;  ///< cos theta(X=0, X=1)
  RationalAngle gamma;  ///< internal angle at X=0
};

/// Which branch of the cosine-rule case analysis decided the result.
enum class TriangleCase {
  Pole,             ///< sin a * sin b == 0
  RationalCos,      ///< cos(gamma) rational
  RationalCosSq,    ///< cos(gamma) irrational, cos^2(gamma) in {1/2, 3/4}
  Generic,          ///< cos^2(gamma) irrational
};

[[nodiscard]] std::string_view to_string(TriangleCase c);

struct Ontic {
  Rational value;
  TriangleCase branch;
  /// True when a rational result arises although both sines are nonzero,
  /// i.e. an exact coincidence among the three terms of the cosine rule.
  bool exceptional = false;
};

struct NonOntic {
  TriangleCase reason;
};

using OnticClass = std::variant<Ontic, NonOntic>;

struct CounterfactualAnalysis {
  OnticClass result;
  /// (1 - ca^2)(1 - cb^2), the square of sin a * sin b.
  Rational sine_product_sq;
  /// Exact cos theta(X=1, Y=0) as a single-radicand surd; absent in the
  /// generic case where it leaves the quadratic field.
  std::optional<QuadraticSurd> surd;
};

/// Exact decision on whether cos theta(X=1, Y=0) = ca*cb + sa*sb*cos(gamma)
/// is rational. Throws DomainError for cosines outside [-1, 1].
[[nodiscard]] OnticClass counterfactual_cosine_class(const SphericalTriangle& t);

/// Same decision with the intermediate quantities exposed.
[[nodiscard]] CounterfactualAnalysis analyze_counterfactual(const SphericalTriangle& t);

}  // namespace invset::ontology
