// Serial reference kernels against the OpenMP kernels, plus the merged and
// unmerged bracket recursions.

#include <map>

#include <benchmark/benchmark.h>

#include "cssplit/kernels.hpp"
#include "cssplit/skein.hpp"
#include "cssplit/wzwlab.hpp"

namespace {

using namespace cssplit;
namespace ks = kernels::serial;
namespace ko = kernels::omp;

struct Fixture {
  LatticeGrid grid;
  MatrixField u;
  MatrixField log_u;
  LatticeGaugeField a;
};

const Fixture& fixture(int n) {
  static std::map<int, Fixture> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    const LatticeGrid g(n);
    const auto u = random_field(g, GroupClass::SL2C, 0.3, 1);
    it = cache.emplace(n, Fixture{g, u.values(), ks::log_field(u.values()), kn_fields(u)}).first;
  }
  return it->second;
}

template <class F>
void run(benchmark::State& state, F f) {
  const Fixture& fx = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(f(fx));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fx.grid.size()));
}

#define KERNEL_PAIR(name, expr)                                                \
  void BM_serial_##name(benchmark::State& s) {                                 \
    using namespace ks;                                                        \
    run(s, [](const Fixture& fx) { return expr; });                            \
  }                                                                            \
  void BM_omp_##name(benchmark::State& s) {                                    \
    using namespace ko;                                                        \
    run(s, [](const Fixture& fx) { return expr; });                            \
  }                                                                            \
  BENCHMARK(BM_serial_##name)->Arg(64)->Arg(128)->Arg(256);                    \
  BENCHMARK(BM_omp_##name)->Arg(64)->Arg(128)->Arg(256);

KERNEL_PAIR(derivatives, derivatives(fx.grid, fx.u).dz.size())
KERNEL_PAIR(log_field, log_field(fx.u).size())
KERNEL_PAIR(trace_integral, trace_integral(fx.grid, fx.a.a_zbar, fx.a.a_z))
KERNEL_PAIR(wz_slice, wz_slice(fx.grid, fx.log_u, 0.5))
KERNEL_PAIR(flatness_max, flatness_max(fx.grid, fx.a.a_zbar, fx.a.a_z))

void BM_bracket_merged(benchmark::State& state) {
  const PDCode pd = braid_closure(parse_braid("1 1 1 2 -3 2 -3 1 -2 1"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bracket_polynomial(pd));
  }
}
BENCHMARK(BM_bracket_merged);

void BM_bracket_unmerged(benchmark::State& state) {
  const PDCode pd = braid_closure(parse_braid("1 1 1 2 -3 2 -3 1 -2 1"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bracket_polynomial_unmerged(pd));
  }
}
BENCHMARK(BM_bracket_unmerged);

} // namespace

BENCHMARK_MAIN();
