#include <benchmark/benchmark.h>

#include "folim/families.hpp"
#include "folim/formula.hpp"
#include "folim/hintikka.hpp"
#include "folim/interval.hpp"
#include "folim/major.hpp"
#include "folim/pairing.hpp"
#include "folim/pw_codec.hpp"

using namespace folim;

static void BM_PairingEdge(benchmark::State& st) {
  Rng rng(1);
  PlaneCTree s(random_plane_tree(static_cast<std::size_t>(st.range(0)), rng));
  auto f = parse_formula("(or (parnt x y) (parnt y x))");
  for (auto _ : st) benchmark::DoNotOptimize(stone_pairing(s, f, 1));
}
BENCHMARK(BM_PairingEdge)->Arg(100)->Arg(400);

static void BM_LocalTypes(benchmark::State& st) {
  Rng rng(2);
  PlaneCTree s(random_plane_tree(10000, rng));
  for (auto _ : st) benchmark::DoNotOptimize(local_types(s, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_LocalTypes)->DenseRange(1, 3);

static void BM_PwEncode(benchmark::State& st) {
  Rng rng(3);
  auto dg = random_pw_graph(static_cast<std::size_t>(st.range(0)), 3, rng);
  auto h = pd_to_interval(dg.graph, dg.pd);
  for (auto _ : st) benchmark::DoNotOptimize(pw_encode(h));
}
BENCHMARK(BM_PwEncode)->Arg(100)->Arg(1000);

static void BM_MajorNodes(benchmark::State& st) {
  Rng rng(4);
  auto t = random_recursive_tree(static_cast<std::size_t>(st.range(0)), rng);
  for (auto _ : st) benchmark::DoNotOptimize(major_nodes(t, Epsilon(1, 10)));
}
BENCHMARK(BM_MajorNodes)->Arg(10000)->Arg(100000);

BENCHMARK_MAIN();
