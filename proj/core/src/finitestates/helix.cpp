#include "invset/finitestates/helix.hpp"

#include <algorithm>

namespace invset::finitestates {

HelixEnsemble helix_ensemble(const FiniteQubit& q) {
  HelixEnsemble h;
  h.N = q.N();
  h.labels.assign(q.N(), 1);
  std::fill_n(h.labels.begin(), q.n1(), 0);
  return h;
}

std::pair<Rational, Rational> ensemble_statistics(const HelixEnsemble& h) {
  const auto zeros = static_cast<std::int64_t>(std::count(h.labels.begin(), h.labels.end(), 0));
  const auto total = static_cast<std::int64_t>(h.labels.size());
  return {Rational(zeros) / Rational(total), Rational(total - zeros) / Rational(total)};
}

}  // namespace invset::finitestates
