#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "invset/bellsim/ensemble.hpp"

namespace invset::bellsim {

/// 2*sqrt(2) to 40 significant digits.
[[nodiscard]] const std::string& tsirelson_decimal();

struct ChshReport {
  std::uint64_t N = 0;
  Rational S;
  std::array<Rational, 4> correlations;  ///< E_XY by ContextPair::index()
  std::array<Rational, 4> marginal_a;
  std::array<Rational, 4> marginal_b;
  std::string quantum_reference = tsirelson_decimal();
};

/// E_XY = sum of A*B*p(lambda|XY) with p(lambda|XY) the weight normalised
/// over the atoms that define XY; S = E00 + E01 + E10 - E11. Throws
/// DomainError for a context with zero total weight.
[[nodiscard]] ChshReport chsh_value(const BellEnsemble& e);

/// Compact JSON with rationals as "p/q" strings.
[[nodiscard]] std::string to_json(const ChshReport& r);

struct SweepRow {
  std::uint64_t N = 0;
  std::int64_t n = 0;   ///< numerator of the n/N cosine approximation
  Rational S;
  std::string S_decimal;
  std::string gap_to_tsirelson;  ///< | |S| - 2 sqrt 2 |
};

/// Evaluates auto_tsirelson_settings for each N concurrently; rows come back
/// in input order.
[[nodiscard]] std::vector<SweepRow> tsirelson_sweep(std::span<const std::uint64_t> Ns);

inline constexpr const char* kSweepCsvHeader = "N,n,S_num,S_den,S_decimal,gap_to_tsirelson";

[[nodiscard]] std::string to_csv(std::span<const SweepRow> rows);

/// | |s| - 2 sqrt 2 | evaluated with 60 significant digits.
[[nodiscard]] std::string tsirelson_gap(const Rational& s, unsigned significant = 20);

}  // namespace invset::bellsim
