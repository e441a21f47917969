#include <benchmark/benchmark.h>

#include <random>

#include "selfsim/constructors.hpp"
#include "selfsim/groupoid.hpp"
#include "selfsim/semigroup.hpp"
#include "selfsim/text.hpp"

using namespace selfsim;

namespace {

std::vector<SemigroupElement> sample(const SelfSimilarTriple& t, std::size_t n) {
  std::mt19937 rng(1);
  const auto window = default_window(t.group(), 4);
  const auto paths = paths_up_to(t.graph(), 6);
  std::uniform_int_distribution<std::size_t> pick(0, paths.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_g(0, window.size() - 1);
  std::vector<SemigroupElement> out;
  while (out.size() < n) {
    const Path& a = paths[pick(rng)];
    const Path& b = paths[pick(rng)];
    const auto& g = window[pick_g(rng)];
    if (t.act(g, b.source()) == a.source()) {
      out.push_back(make_triple(t, a, g, b));
    }
  }
  return out;
}

void BM_SemigroupMul(benchmark::State& state) {
  const auto t = odometer();
  const auto xs = sample(t, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(t, xs[i % 256], xs[(i * 7 + 3) % 256]));
    ++i;
  }
}
BENCHMARK(BM_SemigroupMul);

void BM_ActLongPath(benchmark::State& state) {
  const auto t = katsura_3_2();
  const auto paths = paths_of_length(t.graph(), static_cast<std::size_t>(state.range(0)));
  const auto g = GroupElement::integer(123456);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(t.act_and_cocycle(g, paths[i++ % paths.size()]));
  }
}
BENCHMARK(BM_ActLongPath)->Arg(4)->Arg(8);

void BM_GermEq(benchmark::State& state) {
  const Groupoid G(odometer());
  const Germ u = parse_germ(G, "[@v, 5, @v; e1.e0(e1.e1.e0)*]");
  const Germ v = G.absorb(u, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(G.germ_eq(u, v));
  }
}
BENCHMARK(BM_GermEq);

void BM_GermCompose(benchmark::State& state) {
  const Groupoid G(odometer());
  const Germ u = parse_germ(G, "[e1, 3, e0.e0; e0.e0(e1.e0)*]");
  const Germ v = G.inverse(u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(G.compose(v, u));
  }
}
BENCHMARK(BM_GermCompose);

void BM_FMap(benchmark::State& state) {
  const Groupoid G(katsura_3_2());
  const Germ u = parse_germ(G, "[(1,1,0), 7, @1; (1,1,2).((1,1,1))*]");
  for (auto _ : state) {
    benchmark::DoNotOptimize(G.f_map(u));
  }
}
BENCHMARK(BM_FMap);

}  // namespace

BENCHMARK_MAIN();
