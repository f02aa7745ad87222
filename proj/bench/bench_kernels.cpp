// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <vector>

#include "frl/catalog.hpp"
#include "frl/kernels.hpp"

namespace {

using namespace frl;

std::vector<double> grid(std::size_t n) {
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = -1.0 + 1.99 * double(i) / double(n);
  return t;
}

const kernels::Fn& chirp_fn() {
  static const auto d = catalog::chirp(0.7, 0.5);
  static const kernels::Fn f = [](double x) { return catalog::evaluate(d, x); };
  return f;
}

template <auto Kernel>
void BM_evaluate(benchmark::State& state) {
  const auto t = grid(static_cast<std::size_t>(state.range(0)));
  std::vector<double> out(t.size());
  for (auto _ : state) {
    Kernel(chirp_fn(), t, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_sup_difference(benchmark::State& state) {
  const auto t = grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(chirp_fn(), t, 1e-3));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_increments(benchmark::State& state) {
  const auto t = grid(static_cast<std::size_t>(state.range(0)));
  std::vector<double> v(t.size());
  kernels::serial::evaluate(chirp_fn(), t, v);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(v, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_evaluate<kernels::serial::evaluate>)->Name("evaluate/serial")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_evaluate<kernels::omp::evaluate>)->Name("evaluate/omp")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_sup_difference<kernels::serial::sup_abs_difference>)->Name("sup_diff/serial")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_sup_difference<kernels::omp::sup_abs_difference>)->Name("sup_diff/omp")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_increments<kernels::serial::abs_increment_sum>)->Name("increments/serial")->Range(1 << 12, 1 << 22);
BENCHMARK(BM_increments<kernels::omp::abs_increment_sum>)->Name("increments/omp")->Range(1 << 12, 1 << 22);

int main(int argc, char** argv) {
  kernels::apply_thread_cap();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
