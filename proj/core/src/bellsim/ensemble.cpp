#include "invset/bellsim/ensemble.hpp"

#include <algorithm>

namespace invset::bellsim {

namespace {

// Weight of outcome pair (a, b) in a two-valued distribution with zero
// marginals and correlation e.
Rational pair_weight(int a, int b, const Rational& e) { return (Rational(1) + Rational(a * b) * e) / Rational(4); }

void add_class(BellEnsemble& out, AtomClass cls, ContextPair first, ContextPair second, const Rational& e_first,
               const Rational& e_second) {
  const Rational half(1, 2);
  for (unsigned bits = 0; bits < 16; ++bits) {
    const int a_first = spin_from_bit((bits >> 3U) & 1U);
    const int b_first = spin_from_bit((bits >> 2U) & 1U);
    const int a_second = spin_from_bit((bits >> 1U) & 1U);
    const int b_second = spin_from_bit(bits & 1U);

    Atom atom;
    atom.id = out.atoms.size();
    atom.cls = cls;
    atom.weight = half * pair_weight(a_first, b_first, e_first) * pair_weight(a_second, b_second, e_second);
    atom.outcomes[first.index()] = Outcome{a_first, b_first};
    atom.outcomes[second.index()] = Outcome{a_second, b_second};
    out.atoms.push_back(std::move(atom));
  }
}

std::string atom_label(const Atom& a) { return "atom " + std::to_string(a.id); }

}  // namespace

Rational BellEnsemble::total_weight() const {
  Rational t;
  for (const auto& a : atoms) t += a.weight;
  return t;
}

Rational BellEnsemble::context_weight(ContextPair c) const {
  Rational t;
  for (const auto& a : atoms) {
    if (a.defines(c)) t += a.weight;
  }
  return t;
}

BellEnsemble build_bell_ensemble(const MeasurementSettings& s) {
  validate_settings(s);
  const auto E = [&](ContextPair c) { return singlet_correlation(s.cosine(c)); };

  BellEnsemble out;
  out.N = s.N;
  out.atoms.reserve(32);
  // Same: (A0, B0, A1, B1); Diff: (A0, B1, A1, B0).
  add_class(out, AtomClass::Same, {0, 0}, {1, 1}, E({0, 0}), E({1, 1}));
  add_class(out, AtomClass::Diff, {0, 1}, {1, 0}, E({0, 1}), E({1, 0}));
  return out;
}

Verification verify_free_choice_on_IU(const BellEnsemble& e) {
  Verification v;
  const auto fail = [&](std::string msg) {
    v.ok = false;
    v.diagnostics.push_back(std::move(msg));
  };

  std::array<Rational, 4> totals;
  for (const auto c : ontology::kAllContexts) totals[c.index()] = e.context_weight(c);

  for (const auto& atom : e.atoms) {
    if (atom.weight < Rational(0)) fail(atom_label(atom) + ": negative weight " + atom.weight.str());

    std::vector<ContextPair> defined;
    for (const auto c : ontology::kAllContexts) {
      if (atom.defines(c)) defined.push_back(c);
    }
    if (defined.empty()) {
      fail(atom_label(atom) + ": no defined context");
      continue;
    }
    const auto pair = ontology::admissible_contexts(defined.front());
    if (defined.size() != 2 || defined[0] != pair[0] || defined[1] != pair[1]) {
      std::string list;
      for (const auto c : defined) list += (list.empty() ? "" : ",") + c.str();
      fail(atom_label(atom) + ": defined contexts {" + list + "} are not an admissible pair {" + pair[0].str() + "," +
           pair[1].str() + "}");
      continue;
    }

    const Rational& t0 = totals[pair[0].index()];
    const Rational& t1 = totals[pair[1].index()];
    if (t0.is_zero() || t1.is_zero()) {
      fail(atom_label(atom) + ": context with zero total weight");
      continue;
    }
    const Rational p0 = atom.weight / t0;
    const Rational p1 = atom.weight / t1;
    if (p0 != p1) {
      fail(atom_label(atom) + ": p(lambda|" + pair[0].str() + ") = " + p0.str() + " but p(lambda|" + pair[1].str() +
           ") = " + p1.str());
    }
  }
  return v;
}

Verification verify_local_causality_on_IU(const BellEnsemble& e) {
  Verification v;
  for (const auto& atom : e.atoms) {
    // First value seen for each setting.
    std::array<std::optional<int>, 2> a_of_x;
    std::array<std::optional<int>, 2> b_of_y;
    for (const auto c : ontology::kAllContexts) {
      const auto& o = atom.outcomes[c.index()];
      if (!o) continue;
      auto& a = a_of_x[c.x];
      auto& b = b_of_y[c.y];
      if (a && *a != o->a) {
        v.ok = false;
        v.diagnostics.push_back(atom_label(atom) + ": A_" + std::to_string(c.x) + " differs across contexts");
      }
      if (b && *b != o->b) {
        v.ok = false;
        v.diagnostics.push_back(atom_label(atom) + ": B_" + std::to_string(c.y) + " differs across contexts");
      }
      a = o->a;
      b = o->b;
    }
  }
  return v;
}

}  // namespace invset::bellsim
