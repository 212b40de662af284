#include "invset/ontology/spherical_triangle.hpp"

#include "invset/errors.hpp"
#include "invset/exactnum/niven.hpp"

namespace invset::ontology {

using exactnum::is_perfect_square;
using exactnum::niven_classify;

std::string_view to_string(TriangleCase c) {
  switch (c) {
    case TriangleCase::Pole:
      return "pole";
    case TriangleCase::RationalCos:
      return "rational-cos-gamma";
    case TriangleCase::RationalCosSq:
      return "rational-cos2-gamma";
    case TriangleCase::Generic:
      return "generic";
  }
  return "unknown";
}

namespace {

void check_cosine(const Rational& c, std::string_view name) {
  if (c < Rational(-1) || c > Rational(1)) {
    throw DomainError(std::string(name) + " = " + c.str() + " outside [-1, 1]");
  }
}

}  // namespace

CounterfactualAnalysis analyze_counterfactual(const SphericalTriangle& t) {
  check_cosine(t.cos_side_a, "cos side a");
  check_cosine(t.cos_side_b, "cos side b");

  const Rational one(1);
  const Rational& ca = t.cos_side_a;
  const Rational& cb = t.cos_side_b;
  const Rational cc = ca * cb;
  const Rational sines_sq = (one - ca * ca) * (one - cb * cb);

  CounterfactualAnalysis out{NonOntic{TriangleCase::Generic}, sines_sq, std::nullopt};

  if (sines_sq.is_zero()) {
    out.result = Ontic{cc, TriangleCase::Pole, false};
    out.surd = QuadraticSurd(cc);
    return out;
  }

  if (const auto g = niven_classify(t.gamma); g.is_rational()) {
    // cos(X=1,Y=0) = cc + g*sqrt(sines_sq)
    out.surd = QuadraticSurd(cc) + exactnum::surd_mul(QuadraticSurd(g.value()), QuadraticSurd::sqrt(sines_sq));
    if (g.value().is_zero()) {
      out.result = Ontic{cc, TriangleCase::RationalCos, true};
    } else if (const auto q = is_perfect_square(sines_sq)) {
      out.result = Ontic{cc + *q * g.value(), TriangleCase::RationalCos, true};
    } else {
      out.result = NonOntic{TriangleCase::RationalCos};
    }
    return out;
  }

  // cos^2(gamma) = (1 + cos 2gamma)/2 is rational exactly when cos 2gamma is;
  // with cos(gamma) irrational that leaves cos 2gamma in {0, 1/2}.
  if (const auto h = niven_classify(t.gamma.doubled()); h.is_rational()) {
    const Rational cos_sq_gamma = (one + h.value()) / Rational(2);
    const Rational radicand = sines_sq * cos_sq_gamma;
    const int sign = t.gamma.cos_sign();
    out.surd = QuadraticSurd(cc) + exactnum::surd_mul(QuadraticSurd(Rational(sign)), QuadraticSurd::sqrt(radicand));
    if (const auto q = is_perfect_square(radicand)) {
      out.result = Ontic{cc + Rational(sign) * *q, TriangleCase::RationalCosSq, true};
    } else {
      out.result = NonOntic{TriangleCase::RationalCosSq};
    }
    return out;
  }

  return out;
}

OnticClass counterfactual_cosine_class(const SphericalTriangle& t) { return analyze_counterfactual(t).result; }

}  // namespace invset::ontology
