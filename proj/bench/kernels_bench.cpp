#include <benchmark/benchmark.h>

#include <vector>

#include "robin/axisym.hpp"
#include "robin/distance.hpp"
#include "robin/radial.hpp"

namespace {

using namespace robin;

const BoundaryDistance& spheroid_distance() {
  static const BoundaryDistance d(RevolutionProfile::spheroid(0.6, 1.0));
  return d;
}

template <void (*Kernel)(const BoundaryDistance&, const SamplingGrid&, std::span<double>)>
void BM_DistanceField(benchmark::State& state) {
  const BoundaryDistance& d = spheroid_distance();
  const SamplingGrid grid = make_sampling_grid(d, static_cast<int>(state.range(0)));
  std::vector<double> field(grid.node_count());
  for (auto _ : state) {
    Kernel(d, grid, field);
    benchmark::DoNotOptimize(field.data());
  }
  state.SetItemsProcessed(state.iterations() * grid.node_count());
}

template <kernels::LevelSetMeasures (*Kernel)(const SamplingGrid&, std::span<const double>, std::span<const double>)>
void BM_LevelSets(benchmark::State& state) {
  const BoundaryDistance& d = spheroid_distance();
  const SamplingGrid grid = make_sampling_grid(d, static_cast<int>(state.range(0)));
  std::vector<double> field(grid.node_count());
  kernels::distance_field_omp(d, grid, field);
  std::vector<double> t(101);
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = 0.6 * k / (t.size() - 1);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(grid, field, t));
  state.SetItemsProcessed(state.iterations() * grid.node_count());
}

void BM_MeshEigenpair(benchmark::State& state) {
  const MeridianMesh mesh = build_mesh(RevolutionProfile::spheroid(0.8, 1.0), 0.8 / state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mesh_eigenpair(mesh, BoundaryParameter::robin(-1)).eigenvalue);
  state.counters["nodes"] = static_cast<double>(mesh.nodes.size());
}

void BM_SolveBall(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_ball({3, 1.0, BoundaryParameter::robin(-1)}, 1e-10).eigenvalue);
}

}  // namespace

BENCHMARK(BM_DistanceField<kernels::distance_field_serial>)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistanceField<kernels::distance_field_omp>)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LevelSets<kernels::level_set_measures_serial>)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LevelSets<kernels::level_set_measures_omp>)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MeshEigenpair)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveBall)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
