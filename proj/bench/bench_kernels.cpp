// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "steinberg/algebra.hpp"
#include "steinberg/catalog.hpp"
#include "steinberg/structure.hpp"

using namespace steinberg;

namespace {

std::shared_ptr<const AlgebraContext> pair_context(std::size_t n, std::int64_t p) {
  auto g = std::make_shared<const FiniteGroupoid>(pair_groupoid(n));
  return AlgebraContext::create(TwoCocycle(g, 1), Ring::prime_field(p));
}

AlgebraElement random_element(const std::shared_ptr<const AlgebraContext>& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Scalar> c;
  for (std::size_t a = 0; a < ctx->dimension(); ++a) c.push_back(ctx->ring().from_integer(static_cast<long long>(rng() % 7)));
  return ctx->element(std::move(c));
}

template <bool Parallel>
void BM_convolve(benchmark::State& state) {
  const auto ctx = pair_context(static_cast<std::size_t>(state.range(0)), 7);
  const auto f = random_element(ctx, 1), g = random_element(ctx, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Parallel ? convolve(f, g) : reference::convolve(f, g));
  state.SetLabel("|G| = " + std::to_string(ctx->dimension()));
}

// s = t + db with b = 1 on every non-unit, so the least witness sits late in the scan.
template <bool Parallel>
void BM_coboundary(benchmark::State& state) {
  auto g = std::make_shared<const FiniteGroupoid>(pair_groupoid(static_cast<std::size_t>(state.range(0))));
  const auto n = static_cast<std::uint32_t>(state.range(1));
  TwoCocycle t(g, n);
  Coboundary b(g, n);
  for (Arrow a = 0; a < g->size(); ++a)
    if (!g->is_unit(a)) b.set(a, n - 1);
  const auto s = apply_coboundary(t, b);
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? find_coboundary_brute_force(s, t) : reference::find_coboundary_brute_force(s, t));
}

template <bool Parallel>
void BM_simplicity(benchmark::State& state) {
  const auto ctx = pair_context(static_cast<std::size_t>(state.range(0)), state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? is_simple(ctx, SimplicityMode::Exhaustive)
                                      : reference::exhaustive_simplicity(ctx));
}

}  // namespace

BENCHMARK(BM_convolve<false>)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_convolve<true>)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_coboundary<false>)->Args({3, 3})->Args({4, 2})->Args({4, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_coboundary<true>)->Args({3, 3})->Args({4, 2})->Args({4, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_simplicity<false>)->Args({3, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_simplicity<true>)->Args({3, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
