// Serial reference vs OpenMP kernels. Thread count comes from OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "tristrip/graph.hpp"
#include "tristrip/kernels.hpp"
#include "tristrip/partition.hpp"
#include "tristrip/transfer.hpp"

using namespace tristrip;

namespace {

Graph strip(int n) {
  auto load = [](const char* name) {
    return load_graph_file(std::string(TRISTRIP_FIXTURE_DIR) + "/" + name + ".graph").framed(0);
  };
  return strip_graph(load("W4"), load("neg10"), n);
}

template <class F>
void colourings(benchmark::State& state, F count) {
  Graph g = strip(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count(g, 4));
}

void BM_Colourings_Serial(benchmark::State& s) { colourings(s, kernels::serial::count_colourings); }
void BM_Colourings_Parallel(benchmark::State& s) { colourings(s, kernels::parallel::count_colourings); }

template <class F>
void gadget(benchmark::State& state, F count) {
  Gadget l = gadget_layer();
  int x = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count(l.graph, l.outer, l.inner, x));
}

void BM_Gadget_Serial(benchmark::State& s) { gadget(s, kernels::serial::count_by_two_frames); }
void BM_Gadget_Parallel(benchmark::State& s) { gadget(s, kernels::parallel::count_by_two_frames); }

template <class F>
void sweep(benchmark::State& state, F run) {
  auto load = [](const char* name) {
    return partitioned_chromatic(load_graph_file(std::string(TRISTRIP_FIXTURE_DIR) + "/" + name + ".graph").framed(0));
  };
  PartitionVector qa = load("H"), qb = load("W4");
  unsigned long n = static_cast<unsigned long>(state.range(0));
  std::vector<Rational> points;
  for (int k = 1; k <= 24; ++k) points.push_back(4 - power_of_two(-k));
  kernels::SignProbe probe = [&](const Rational& x) { return sgn(family_value_at(qa, qb, n, x)); };
  for (auto _ : state) benchmark::DoNotOptimize(run(points, probe));
}

void BM_Sweep_Serial(benchmark::State& s) { sweep(s, kernels::serial::sign_sweep); }
void BM_Sweep_Parallel(benchmark::State& s) { sweep(s, kernels::parallel::sign_sweep); }

}  // namespace

BENCHMARK(BM_Colourings_Serial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Colourings_Parallel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Gadget_Serial)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Gadget_Parallel)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep_Serial)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep_Parallel)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
