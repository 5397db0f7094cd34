#include <benchmark/benchmark.h>

#include "vsb/dilation.hpp"
#include "vsb/families.hpp"
#include "vsb/gf.hpp"
#include "vsb/padic.hpp"
#include "vsb/poly.hpp"
#include "vsb/valueset.hpp"

using namespace vsb;

namespace {

void bm_value_set_univariate(benchmark::State& state) {
    auto f = zan_cao(1);
    for (auto _ : state) benchmark::DoNotOptimize(value_set(f));
}
BENCHMARK(bm_value_set_univariate);

void bm_value_set_bivariate(benchmark::State& state) {
    auto f25 = Field::make(5, 2);
    auto f = PolyMap::parse("vars:2; f1 = x1^3 + x2; f2 = x1*x2^2", f25);
    for (auto _ : state) benchmark::DoNotOptimize(value_set(f));
}
BENCHMARK(bm_value_set_bivariate);

void bm_multiplicity_search(benchmark::State& state) {
    DegreeMatrix D{3, {{3, 1, 0}, {0, 2, 2}, {1, 0, 3}, {2, 2, 1}}};
    for (auto _ : state) benchmark::DoNotOptimize(omega_from_matrix(D, 7));
}
BENCHMARK(bm_multiplicity_search);

void bm_dilation_lp(benchmark::State& state) {
    DegreeMatrix D{2, {{4, 0}, {0, 4}, {3, 1}, {1, 2}}};
    for (auto _ : state) benchmark::DoNotOptimize(mu_from_matrix(D));
}
BENCHMARK(bm_dilation_lp);

void bm_power_sum(benchmark::State& state) {
    auto f = zan_cao(1);
    auto ext = ExtensionCtx::make(f.field(), 1);
    for (auto _ : state) benchmark::DoNotOptimize(power_sum(f, ext, 6));
}
BENCHMARK(bm_power_sum);

void bm_multiplicative_lift(benchmark::State& state) {
    auto f = Field::make(3, 3);
    PadicCtx ctx(f, 4);
    auto x = f->from_rank(17);
    for (auto _ : state) benchmark::DoNotOptimize(teichmuller_lift(ctx, x));
}
BENCHMARK(bm_multiplicative_lift);

} // namespace

BENCHMARK_MAIN();
