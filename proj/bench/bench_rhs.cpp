// Production kernel against the serial reference on a KH state.
// DW_THREADS sets the kernel's thread count.

#include <benchmark/benchmark.h>

#include "dwflow/grid.hpp"
#include "dwflow/problems.hpp"
#include "dwflow/rhs.hpp"
#include "dwflow/runner.hpp"

namespace {

using namespace dwflow;

Field kh_state(int n, int order) {
  Field f = init_kh(Grid::unit_square(n, n, halo_width(order)));
  apply_bc(f);
  return f;
}

template <Tendency (*Fn)(const Field&, const SchemeSpec&)>
void bm(benchmark::State& state) {
  const SchemeSpec scheme{static_cast<FluxFamily>(state.range(2)), static_cast<int>(state.range(1))};
  const Field f = kh_state(static_cast<int>(state.range(0)), scheme.order);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(f, scheme));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void args(benchmark::internal::Benchmark* b) {
  for (int order : {1, 2, 5, 9})
    for (auto fam : {FluxFamily::ldcu, FluxFamily::lcdcu, FluxFamily::vfv})
      b->Args({128, order, static_cast<long>(fam)});
  b->ArgNames({"n", "order", "family"})->Unit(benchmark::kMillisecond);
}

BENCHMARK(bm<rhs>)->Name("kernel")->Apply(args);
BENCHMARK(bm<reference_rhs>)->Name("reference")->Apply(args);

}  // namespace

int main(int argc, char** argv) {
  configure_threads();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
