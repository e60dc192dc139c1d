#include "chargen/posetgraph.hpp"

#include <benchmark/benchmark.h>

using namespace chargen;

static void BM_WeylGroup(benchmark::State &state)
{
	for (auto _ : state) {
		WeylGroup g(algebra("A4"));
		benchmark::DoNotOptimize(g.size());
	}
}
BENCHMARK(BM_WeylGroup);

static void BM_Character(benchmark::State &state)
{
	auto spec = algebra("G2");
	int k = (int)state.range(0);
	for (auto _ : state) {
		// Bypass the global cache so each iteration does the full recursion.
		CharPoly ch = demazure_character(spec, {k, k});
		benchmark::DoNotOptimize(ch);
	}
}
BENCHMARK(BM_Character)->Arg(1)->Arg(2)->Arg(3);

static void BM_GeneratorByDefinition(benchmark::State &state)
{
	auto spec = algebra("B2");
	int N = (int)state.range(0);
	for (auto _ : state) {
		GenSeries x = x_by_definition(spec, N);
		benchmark::DoNotOptimize(x);
	}
}
BENCHMARK(BM_GeneratorByDefinition)->Arg(2)->Arg(3)->Arg(4);

static void BM_GeneratorViaYZ(benchmark::State &state)
{
	auto spec = algebra("B2");
	int N = (int)state.range(0);
	for (auto _ : state) {
		GenSeries x = x_via_yz(spec, N);
		benchmark::DoNotOptimize(x);
	}
}
BENCHMARK(BM_GeneratorViaYZ)->Arg(2)->Arg(3)->Arg(4);

static void BM_GeneratorViaSweep(benchmark::State &state)
{
	auto spec = algebra("B2");
	int N = (int)state.range(0);
	for (auto _ : state) {
		GenSeries x = x_via_demazure(spec, N);
		benchmark::DoNotOptimize(x);
	}
}
BENCHMARK(BM_GeneratorViaSweep)->Arg(2)->Arg(3);

static void BM_GeneratorViaGraph(benchmark::State &state)
{
	auto spec = algebra("G2");
	int N = (int)state.range(0);
	for (auto _ : state) {
		GenSeries x = x_via_graph(spec, N);
		benchmark::DoNotOptimize(x);
	}
}
BENCHMARK(BM_GeneratorViaGraph)->Arg(1)->Arg(2);

static void BM_NumeratorStraightening(benchmark::State &state)
{
	auto spec = algebra("G2");
	for (auto _ : state) {
		auto y = y_via_chhat(spec);
		benchmark::DoNotOptimize(y.Y);
	}
}
BENCHMARK(BM_NumeratorStraightening);

BENCHMARK_MAIN();
