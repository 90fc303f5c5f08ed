#include <benchmark/benchmark.h>

#include <so3zi/lattice.hpp>
#include <so3zi/number_theory.hpp>

#include <random>

using namespace so3zi;

namespace {

GaussInt rnd(std::mt19937_64& rng, long long bound) {
  std::uniform_int_distribution<long long> u(-bound, bound);
  return {u(rng), u(rng)};
}

void BM_Gcd(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const long long bound = state.range(0);
  for (auto _ : state) {
    GaussInt x = rnd(rng, bound), y = rnd(rng, bound);
    if (x.is_zero() && y.is_zero()) continue;
    benchmark::DoNotOptimize(gcd(x, y));
  }
}
BENCHMARK(BM_Gcd)->Arg(100)->Arg(1000000)->Arg(1000000000000LL);

// fixed words keep the run deterministic
std::vector<CMat> members(int count) {
  std::mt19937_64 rng(2);
  std::vector<CMat> out;
  auto reps = coset_reps();
  auto gens = xi12_generators();
  for (int k = 0; k < count; ++k) {
    CMat m = CMat::identity();
    for (int j = 0; j < 6; ++j) {
      m = m * (rng() % 2 ? reps[rng() % reps.size()].matrix() : to_cyc8(gens[rng() % gens.size()]));
    }
    out.push_back(m);
  }
  return out;
}

void BM_Classify(benchmark::State& state) {
  auto ms = members(64);
  size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify(ms[k++ % ms.size()]));
}
BENCHMARK(BM_Classify);

void BM_MemberOracle(benchmark::State& state) {
  auto ms = members(64);
  size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_member_oracle(ms[k++ % ms.size()]));
}
BENCHMARK(BM_MemberOracle);

void BM_Hecke(benchmark::State& state) {
  const GMat alphas[] = {{1, 5, 0, 2}, {GaussInt{1, 1}, 3, GaussInt{2, -1}, GaussInt{4, 3}}, {2, 1, 0, GaussInt{0, 1}}};
  size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(hecke_decompose(alphas[k++ % 3]));
}
BENCHMARK(BM_Hecke);

}  // namespace
