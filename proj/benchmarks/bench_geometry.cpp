#include <benchmark/benchmark.h>

#include <so3zi/covol.hpp>
#include <so3zi/domains.hpp>

#include <random>

using namespace so3zi;

namespace {

void BM_ReduceGamma(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ux(-3, 3), uu(-3, 2);
  for (auto _ : state) {
    H3Point z{{ux(rng), ux(rng)}, std::exp(uu(rng))};
    benchmark::DoNotOptimize(reduce(DomainKind::GammaH3, z));
  }
}
BENCHMARK(BM_ReduceGamma);

void BM_ReducePicard(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> ux(-3, 3), uu(-3, 2);
  for (auto _ : state) {
    H3Point z{{ux(rng), ux(rng)}, std::exp(uu(rng))};
    benchmark::DoNotOptimize(reduce(DomainKind::PicardH3, z));
  }
}
BENCHMARK(BM_ReducePicard);

void BM_ZetaTruncated(benchmark::State& state) {
  const double R = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeta_qi_truncated(2.0, R));
}
BENCHMARK(BM_ZetaTruncated)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_HypVolume(benchmark::State& state) {
  const auto kind = static_cast<DomainKind>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hyp_volume(kind));
}
BENCHMARK(BM_HypVolume)
    ->Arg(static_cast<int>(DomainKind::GammaH3))
    ->Arg(static_cast<int>(DomainKind::PicardH3))
    ->Arg(static_cast<int>(DomainKind::GammaIntH2))
    ->Arg(static_cast<int>(DomainKind::SL2Z_H2))
    ->Unit(benchmark::kMillisecond);

}  // namespace
