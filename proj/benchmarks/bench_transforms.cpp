#include <benchmark/benchmark.h>

#include <vector>

#include "scalefree/scalefree.hpp"

namespace sf = scalefree;

namespace {

std::vector<double> uniform_column(std::size_t n, std::uint64_t seed) {
  sf::Rng rng(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = rng.unit();
  return v;
}

void BM_FitAres(benchmark::State& state) {
  const auto col = uniform_column(static_cast<std::size_t>(state.range(0)), 1);
  const auto t = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sf::fit_ares(col, sf::kDefaultPsi, t, 7));
}
BENCHMARK(BM_FitAres)->Args({10000, 10})->Args({10000, 40})->Args({1000000, 10});

void BM_TransformAres(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto col = uniform_column(n, 2);
  const auto m = sf::fit_ares(col, sf::kDefaultPsi, static_cast<std::size_t>(state.range(1)), 7);
  std::vector<double> out(n);
  for (auto _ : state) {
    sf::transform_ares(m, col, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TransformAres)->ArgsProduct({{10000, 20000, 40000}, {10, 20, 40}});

void BM_TransformRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto col = uniform_column(n, 3);
  const auto m = sf::fit_rank(col);
  std::vector<double> out(n);
  for (auto _ : state) {
    sf::transform_rank(m, col, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TransformRank)->Arg(10000)->Arg(100000);

void BM_Lof(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  constexpr std::size_t kCols = 16;
  const auto values = uniform_column(n * kCols, 4);
  sf::Matrix x(n, kCols);
  x.values = values;
  const auto k = sf::lof_neighbors_for(n);
  for (auto _ : state) benchmark::DoNotOptimize(sf::lof_scores(x, k));
}
BENCHMARK(BM_Lof)->Arg(500)->Arg(2000);

}  // namespace
BENCHMARK_MAIN();
