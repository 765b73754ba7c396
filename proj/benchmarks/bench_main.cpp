#include <benchmark/benchmark.h>

#include <vector>

#include "endoforge/abelian_pgroup.hpp"
#include "endoforge/constructors.hpp"
#include "endoforge/fitting.hpp"
#include "endoforge/hopf_galois.hpp"
#include "endoforge/nearring.hpp"

using namespace endoforge;

namespace {

FiniteGroup elementary(int rank) { return abelian(std::vector<long long>(rank, 2)); }

}  // namespace

static void BM_CountEndos_C2n(benchmark::State& state) {
  const FiniteGroup g = elementary(static_cast<int>(state.range(0)));
  std::size_t n = 0;
  for (auto _ : state) {
    n = count_endomorphisms(g);
    benchmark::DoNotOptimize(n);
  }
  state.counters["endos"] = static_cast<double>(n);
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * n));
}
BENCHMARK(BM_CountEndos_C2n)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_CountEndos_S4(benchmark::State& state) {
  const FiniteGroup g = symmetric(4);
  for (auto _ : state) benchmark::DoNotOptimize(count_endomorphisms(g));
}
BENCHMARK(BM_CountEndos_S4)->Unit(benchmark::kMillisecond);

static void BM_QuasiInverse(benchmark::State& state) {
  const FiniteGroup g = elementary(4);
  const auto es = enumerate_endomorphisms(g, EndoFilter::parse("fpf"));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(quasi_inverse(es[i]));
    i = (i + 1) % es.size();
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_QuasiInverse);

static void BM_MatrixQuasiInverse(benchmark::State& state) {
  const AbelianIso iso = homocyclic_shape(abelian({4, 2, 2}));
  const auto es = enumerate_endomorphisms(iso.group(), EndoFilter::parse("fpf"));
  std::vector<EndoMatrix> ms;
  for (const Endo& e : es) ms.push_back(to_matrix(e, iso));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(matrix_quasi_inverse(ms[i]));
    i = (i + 1) % ms.size();
  }
}
BENCHMARK(BM_MatrixQuasiInverse);

static void BM_Fitting(benchmark::State& state) {
  const SemidirectProduct f = frobenius(7, 3);
  const auto es = enumerate_endomorphisms(f.group);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fitting_decomposition(es[i]));
    i = (i + 1) % es.size();
  }
}
BENCHMARK(BM_Fitting);

static void BM_ChildsPairs_C2_4(benchmark::State& state) {
  const FiniteGroup g = elementary(4);
  const auto es = enumerate_endomorphisms(g, EndoFilter::parse("fpf-abelian"));
  std::size_t i = 0, j = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(childs_equivalent(es[i], es[j]));
    if (++j == es.size()) j = 0, i = (i + 1) % es.size();
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ChildsPairs_C2_4);

static void BM_Census(benchmark::State& state) {
  const FiniteGroup g = state.range(0) == 0 ? symmetric(3) : cyclic(6);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_regular_subgroups(g, false));
}
BENCHMARK(BM_Census)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
