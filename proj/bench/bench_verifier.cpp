// Serial reference vs OpenMP kernels on the same inputs.

#include <benchmark/benchmark.h>

#include "rainbow/coloring.hpp"
#include "rainbow/families.hpp"
#include "rainbow/line_graph.hpp"
#include "rainbow/verifier.hpp"

namespace {

using namespace rainbow;

// L^2 of a random cubic graph with its verified construction coloring.
struct Instance {
  Graph target;
  EdgeColoring coloring;
};

Instance cubic_instance(std::size_t n) {
  Rng rng(n);
  const auto c = color_iterated_cubic(random_cubic(n, rng));
  return {c.target, c.coloring};
}

template <bool Parallel>
void BM_Verifier(benchmark::State& state) {
  const auto inst = cubic_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const auto r = Parallel ? is_rainbow_connected(inst.target, inst.coloring)
                            : is_rainbow_connected_serial(inst.target, inst.coloring);
    benchmark::DoNotOptimize(r.connected);
  }
  state.counters["vertices"] = static_cast<double>(inst.target.vertex_count());
}

template <Execution Exec>
void BM_ExactRc(benchmark::State& state) {
  const Graph g = gen_family("cycle", {{"n", static_cast<std::size_t>(state.range(0))}});
  for (auto _ : state) {
    const auto r = exact_rc(g, {12, std::chrono::milliseconds{600'000}}, Exec);
    benchmark::DoNotOptimize(r.value);
  }
}

}  // namespace

BENCHMARK_TEMPLATE(BM_Verifier, false)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Verifier, true)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_ExactRc, Execution::serial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_ExactRc, Execution::parallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
