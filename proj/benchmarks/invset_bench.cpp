#include <numeric>

#include <benchmark/benchmark.h>

#include "invset/bellsim/chsh.hpp"
#include "invset/detgen/doubling.hpp"
#include "invset/exactnum/niven.hpp"
#include "invset/ontology/spherical_triangle.hpp"

namespace {

using invset::exactnum::Rational;
using invset::exactnum::RationalAngle;

void BM_NivenScan(benchmark::State& state) {
  const auto qmax = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) {
    int rational = 0;
    for (std::int64_t q = 1; q <= qmax; ++q) {
      for (std::int64_t p = 0; p < q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        rational += invset::exactnum::niven_classify(RationalAngle(Rational(p, q))).is_rational() ? 1 : 0;
      }
    }
    benchmark::DoNotOptimize(rational);
  }
}
BENCHMARK(BM_NivenScan)->Arg(60)->Arg(240);

void BM_EnsembleChsh(benchmark::State& state) {
  const auto N = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    const auto e = invset::bellsim::build_bell_ensemble(invset::bellsim::auto_tsirelson_settings(N));
    benchmark::DoNotOptimize(invset::bellsim::chsh_value(e).S);
  }
}
BENCHMARK(BM_EnsembleChsh)->RangeMultiplier(4)->Range(16, 1 << 16);

void BM_Counterfactual(benchmark::State& state) {
  const invset::ontology::SphericalTriangle t{Rational(1, 5), Rational(1, 2), RationalAngle(Rational(1, 8))};
  for (auto _ : state) benchmark::DoNotOptimize(invset::ontology::analyze_counterfactual(t));
}
BENCHMARK(BM_Counterfactual);

void BM_GenerateBits(benchmark::State& state) {
  const Rational seed(1, 1000003);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invset::detgen::generate_bits(seed, n));
}
BENCHMARK(BM_GenerateBits)->Arg(64)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
