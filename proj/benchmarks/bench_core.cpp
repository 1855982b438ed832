#include <benchmark/benchmark.h>

#include <random>

#include "coverinv/arrangement.hpp"
#include "coverinv/canonical.hpp"
#include "coverinv/cstar.hpp"
#include "coverinv/snf.hpp"
#include "coverinv/space.hpp"

namespace {

using namespace coverinv;

DiGraph random_dag(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return DiGraph(n, std::move(edges));
}

void BM_CanonicalCertRandomDag(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const DiGraph g = random_dag(rng, static_cast<std::size_t>(state.range(0)), 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_cert(g));
}
BENCHMARK(BM_CanonicalCertRandomDag)->Arg(8)->Arg(16)->Arg(31)->Arg(40);

void BM_CanonicalCertAntichain(benchmark::State& state) {
  const DiGraph g(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_cert(g));
}
BENCHMARK(BM_CanonicalCertAntichain)->Arg(8)->Arg(40);

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> e(-9, 9);
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = e(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_KTheoryDag(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const DiGraph g = random_dag(rng, static_cast<std::size_t>(state.range(0)), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(k_theory(g));
}
BENCHMARK(BM_KTheoryDag)->Arg(10)->Arg(30);

void BM_IntervalTypes(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_interval_cover_types(IntervalDomain::segment(0, 1), n));
}
BENCHMARK(BM_IntervalTypes)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_EnumerateCoversDiscrete(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> pts;
  std::vector<std::vector<std::string>> sub;
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back("p" + std::to_string(i));
    sub.push_back({pts.back()});
  }
  const FiniteSpace x = generate_topology(pts, sub);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_covers(x));
}
BENCHMARK(BM_EnumerateCoversDiscrete)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
