#include <benchmark/benchmark.h>

#include <cmath>

#include "gkm/kesten_mckay.hpp"
#include "gkm/oracle.hpp"
#include "gkm/orthopoly.hpp"
#include "gkm/sampler.hpp"

namespace {

gkm::ParamSet params(int n) {
  std::vector<double> a;
  for (int i = 0; i < n; ++i) a.push_back(-0.8 + 1.6 * (i + 0.5) / n);
  return gkm::ParamSet(a);
}

void BM_density(benchmark::State& state) {
  const gkm::KestenMcKay f(params(static_cast<int>(state.range(0))));
  double x = -0.99;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.pdf(x));
    x = x > 0.98 ? -0.99 : x + 0.01;
  }
}
BENCHMARK(BM_density)->Arg(1)->Arg(6)->Arg(20);

void BM_b_sequence(benchmark::State& state) {
  const auto p = params(6);
  for (auto _ : state) benchmark::DoNotOptimize(gkm::b_sequence(p, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_b_sequence)->Arg(20)->Arg(200);

void BM_gram(benchmark::State& state) {
  const auto p = params(6);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gkm::gram(m, m - 1, p));
}
BENCHMARK(BM_gram)->Arg(4)->Arg(12);

void BM_integrate_weighted(benchmark::State& state) {
  const gkm::ParamSet p = params(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gkm::integrate_weighted([](double x) { return std::exp(x) * std::cos(5 * x); }, 1e-11).value);
  }
}
BENCHMARK(BM_integrate_weighted);

void BM_build_cdf(benchmark::State& state) {
  const auto p = params(4);
  for (auto _ : state) benchmark::DoNotOptimize(gkm::build_cdf(p));
}
BENCHMARK(BM_build_cdf);

void BM_sample(benchmark::State& state) {
  const auto table = gkm::build_cdf(params(4));
  for (auto _ : state) benchmark::DoNotOptimize(gkm::sample(table, state.range(0), 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_sample)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
