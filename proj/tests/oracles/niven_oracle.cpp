#include "oracles/niven_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace invset::oracles {

namespace {

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Exact division by a monic polynomial; throws when a remainder is left.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  if (den.back() != 1) throw std::logic_error("divisor not monic");
  const std::size_t dn = den.size() - 1;
  if (num.size() - 1 < dn) throw std::logic_error("degree too small");
  IntPoly q(num.size() - dn, 0);
  for (std::size_t k = num.size() - 1; k + 1 > dn; --k) {
    const BigInt c = num[k];
    q[k - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
    if (k == dn) break;
  }
  for (const auto& c : num) {
    if (c != 0) throw std::logic_error("non-exact cyclotomic division");
  }
  return q;
}

std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> d;
  for (BigInt i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      d.push_back(i);
      if (i * i != n) d.push_back(n / i);
    }
  }
  return d;
}

}  // namespace

IntPoly cyclotomic(std::uint64_t n) {
  static std::map<std::uint64_t, IntPoly> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  IntPoly zn1(n + 1, 0);
  zn1[0] = -1;
  zn1[n] = 1;
  IntPoly prod{1};
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d == 0) prod = multiply(prod, cyclotomic(d));
  }
  IntPoly result = divide_monic(zn1, prod);
  cache[n] = result;
  return result;
}

IntPoly minimal_cos_polynomial(std::uint64_t q) {
  if (q == 0) throw std::invalid_argument("q must be positive");
  IntPoly psi;  // in x = z + 1/z
  if (q <= 2) {
    // Phi_1 = z - 1, Phi_2 = z + 1: root z0 = +-1, x = 2 z0.
    psi = {q == 1 ? BigInt(-2) : BigInt(2), 1};
  } else {
    const IntPoly phi = cyclotomic(q);
    const std::size_t m = (phi.size() - 1) / 2;
    // z^k + z^-k = D_k(x): D_0 = 2, D_1 = x, D_{k+1} = x D_k - D_{k-1}.
    std::vector<IntPoly> D{{2}, {0, 1}};
    for (std::size_t k = 1; k < m; ++k) {
      IntPoly next(D[k].size() + 1, 0);
      for (std::size_t i = 0; i < D[k].size(); ++i) next[i + 1] += D[k][i];
      for (std::size_t i = 0; i < D[k - 1].size(); ++i) next[i] -= D[k - 1][i];
      D.push_back(next);
    }
    psi.assign(m + 1, 0);
    psi[0] = phi[m];
    for (std::size_t k = 1; k <= m; ++k) {
      for (std::size_t i = 0; i < D[k].size(); ++i) psi[i] += phi[m + k] * D[k][i];
    }
  }
  // Substitute x -> 2x so the roots become cosines.
  IntPoly out(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) out[i] = psi[i] * (BigInt(1) << i);
  trim(out);
  return out;
}

Rational evaluate(const IntPoly& p, const Rational& x) {
  Rational acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

std::vector<Rational> rational_roots(const IntPoly& poly) {
  IntPoly p = poly;
  trim(p);
  std::vector<Rational> roots;
  // Factor out x^k.
  std::size_t lowest = 0;
  while (lowest < p.size() && p[lowest] == 0) ++lowest;
  if (lowest == p.size()) throw std::invalid_argument("zero polynomial");
  if (lowest > 0) {
    roots.emplace_back(0);
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(lowest));
  }
  if (p.size() > 1) {
    for (const auto& a : positive_divisors(p.front())) {
      for (const auto& b : positive_divisors(p.back())) {
        for (int s : {1, -1}) {
          const Rational cand(BigInt(s) * a, b);
          if (evaluate(p, cand).is_zero() && std::find(roots.begin(), roots.end(), cand) == roots.end()) {
            roots.push_back(cand);
          }
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<Rational> oracle_rational_cos(std::int64_t p, std::uint64_t q) {
  // The candidate roots depend on q alone.
  static std::mutex mutex;
  static std::map<std::uint64_t, std::vector<Rational>> cache;
  std::vector<Rational> roots;
  {
    const std::lock_guard lock(mutex);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, rational_roots(minimal_cos_polynomial(q))).first;
    roots = it->second;
  }
  const double c = std::cos(2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(q));
  for (const auto& r : roots) {
    if (std::abs(r.to_double() - c) < 1e-9) return r;
  }
  return std::nullopt;
}

}  // namespace invset::oracles
