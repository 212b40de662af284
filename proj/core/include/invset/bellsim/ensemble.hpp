#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invset/bellsim/settings.hpp"

namespace invset::bellsim {

/// Atoms in class Same carry outcomes on (0,0) and (1,1); Diff on (0,1) and
/// (1,0). The remaining two contexts are undefined for that atom.
enum class AtomClass : std::uint8_t { Same, Diff };

/// Measured values in one context. Outcome bit 0 maps to +1 and bit 1 to -1.
struct Outcome {
  int a = 1;
  int b = 1;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

[[nodiscard]] constexpr int spin_from_bit(unsigned bit) { return bit == 0 ? 1 : -1; }

struct Atom {
  std::uint64_t id = 0;
  AtomClass cls = AtomClass::Same;
  Rational weight;
  std::array<std::optional<Outcome>, 4> outcomes;

  [[nodiscard]] bool defines(ContextPair c) const { return outcomes[c.index()].has_value(); }
};

struct BellEnsemble {
  std::uint64_t N = 2;
  std::vector<Atom> atoms;

  [[nodiscard]] Rational total_weight() const;
  /// Sum of weights over atoms on which `c` is defined.
  [[nodiscard]] Rational context_weight(ContextPair c) const;
};

/// Two classes of 16 atoms each. Within a class the pair of contexts is
/// realised independently with weights (1 + a*b*e)/4, giving exact
/// correlation e = -cos(theta) and zero marginals.
[[nodiscard]] BellEnsemble build_bell_ensemble(const MeasurementSettings& s);

/// Outcome of one of the on-invariant-set checks.
struct Verification {
  bool ok = true;
  std::vector<std::string> diagnostics;

  explicit operator bool() const { return ok; }
};

/// Free Choice restricted to ontic triples: each atom's defined contexts are
/// exactly an admissible pair, and p(lambda|XY) = p(lambda|X†Y†).
[[nodiscard]] Verification verify_free_choice_on_IU(const BellEnsemble& e);

/// Local Causality restricted to ontic triples: reading A_X(lambda) and
/// B_Y(lambda) off the defined contexts never yields two different values.
[[nodiscard]] Verification verify_local_causality_on_IU(const BellEnsemble& e);

}  // namespace invset::bellsim
