#include "invset/ontology/context.hpp"

namespace invset::ontology {

std::array<ContextPair, 2> admissible_contexts(ContextPair c) {
  auto a = c;
  auto b = c.complement();
  if (b < a) std::swap(a, b);
  return {a, b};
}

bool is_admissible(ContextPair realized, ContextPair queried) {
  return queried == realized || queried == realized.complement();
}

exactnum::Rational context_weight(const exactnum::Rational& base_weight, ContextPair realized,
                                  ContextPair queried) {
  return is_admissible(realized, queried) ? base_weight : exactnum::Rational(0);
}

}  // namespace invset::ontology
