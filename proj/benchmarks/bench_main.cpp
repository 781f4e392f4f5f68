#include <benchmark/benchmark.h>

#include "hsg/catalog.hpp"
#include "hsg/cobordism.hpp"
#include "hsg/hirzebruch.hpp"
#include "hsg/toricgenus.hpp"

using namespace hsg;

static void BM_FormalGroupLaw(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(formal_group_law(int(state.range(0))));
}
BENCHMARK(BM_FormalGroupLaw)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ChernDoldGenus(benchmark::State& state, const char* name) {
  auto s = catalog_space(name);
  auto j = standard_structure(s);
  for (auto _ : state) benchmark::DoNotOptimize(chern_dold_genus(s, j, s.n()).cls);
}
BENCHMARK_CAPTURE(BM_ChernDoldGenus, S6, "S6")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ChernDoldGenus, U3_flag, "U3-flag")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ChernDoldGenus, G2_flag, "G2-flag")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ChernDoldGenus, U4_flag, "U4-flag")->Unit(benchmark::kMillisecond);

static void BM_TopChernNumber(benchmark::State& state, const char* name) {
  auto s = catalog_space(name);
  auto j = standard_structure(s);
  for (auto _ : state) benchmark::DoNotOptimize(top_s(s, j));
}
BENCHMARK_CAPTURE(BM_TopChernNumber, G52, "G52")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TopChernNumber, U5_flag, "U5-flag")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TopChernNumber, G622, "G622")->Unit(benchmark::kMillisecond);

static void BM_ChiY(benchmark::State& state) {
  auto s = catalog_space("U5-flag");
  auto c = as_stable(s, standard_structure(s));
  for (auto _ : state) benchmark::DoNotOptimize(chi_y(s, c));
}
BENCHMARK(BM_ChiY)->Unit(benchmark::kMillisecond);

static void BM_RigidityEval(benchmark::State& state) {
  auto s = catalog_space("G622");
  auto c = as_stable(s, standard_structure(s));
  auto f = parse_rigidity_series("u/(1+u^2)");
  auto u = sample_points(s, f, 1, 1).front();
  for (auto _ : state) benchmark::DoNotOptimize(rigidity_eval(s, c, f, u));
}
BENCHMARK(BM_RigidityEval)->Unit(benchmark::kMillisecond);

static void BM_RigiditySymbolic(benchmark::State& state) {
  auto s = catalog_space("U4-flag");
  auto c = as_stable(s, standard_structure(s));
  auto f = parse_rigidity_series("u/(1+u^2)");
  for (auto _ : state) benchmark::DoNotOptimize(rigidity_symbolic(s, c, f).zero);
}
BENCHMARK(BM_RigiditySymbolic)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
