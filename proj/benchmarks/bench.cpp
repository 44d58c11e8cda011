#include <benchmark/benchmark.h>

#include "torsion/fem.hpp"
#include "torsion/mesh.hpp"
#include "torsion/solver.hpp"

using namespace torsion;

static void BM_GenerateDisk(benchmark::State& state) {
  for (auto _ : state) {
    Mesh m = generate_disk(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(m.vertices.data());
  }
}
BENCHMARK(BM_GenerateDisk)->Arg(3)->Arg(5)->Arg(6);

static void BM_AssembleStiffness(benchmark::State& state) {
  Mesh m = generate_disk(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SparseMatrix K = assemble_weighted_stiffness(m, 1.0);
    benchmark::DoNotOptimize(K.values.data());
  }
}
BENCHMARK(BM_AssembleStiffness)->Arg(4)->Arg(6);

static void BM_CgPoisson(benchmark::State& state) {
  Mesh m = generate_disk(static_cast<int>(state.range(0)));
  SparseMatrix K = assemble_weighted_stiffness(m, 1.0);
  std::vector<double> b = assemble_load(m, 4.0);
  apply_dirichlet(K, b, m, 0.0);
  std::vector<double> x0(b.size(), 0.0);
  for (auto _ : state) {
    CgResult r = cg_solve(K, b, x0, 1e-10);
    benchmark::DoNotOptimize(r.x.data());
  }
}
BENCHMARK(BM_CgPoisson)->Arg(4)->Arg(5)->Arg(6);

static void BM_SolveP10(benchmark::State& state) {
  Mesh m = generate_disk(static_cast<int>(state.range(0)));
  ProblemSpec spec;
  spec.mesh = &m;
  spec.h = 4.0;
  SolverConfig cfg;
  cfg.p_schedule = {2, 10};
  for (auto _ : state) {
    ContinuationResult res = p_continuation(spec, cfg);
    benchmark::DoNotOptimize(res.reports.data());
  }
}
BENCHMARK(BM_SolveP10)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
