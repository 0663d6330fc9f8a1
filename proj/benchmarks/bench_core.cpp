#include <benchmark/benchmark.h>

#include <numbers>

#include "lfse/fractional.hpp"
#include "lfse/grid.hpp"
#include "lfse/integrator.hpp"
#include "lfse/rng.hpp"

using namespace lfse;

namespace {

ComplexField random_field(const Grid& g, std::uint64_t seed) {
    Rng rng(seed);
    ComplexField u = make_zero_field(g);
    for (cplx& v : u.values) v = rng.complex_normal();
    return u;
}

ComplexField gaussian(const Grid& g) {
    return sample(g, [](std::span<const double> x) -> cplx {
        double r2 = x[0] * x[0];
        if (x.size() == 2) r2 += x[1] * x[1];
        return std::exp(-r2 / 4.0);
    });
}

void BM_forward_1d(benchmark::State& state) {
    const Grid g = make_grid(1, int(state.range(0)), 32.0);
    const ComplexField u = random_field(g, 1);
    for (auto _ : state) benchmark::DoNotOptimize(forward(u));
}

void BM_forward_2d(benchmark::State& state) {
    const Grid g = make_grid(2, int(state.range(0)), 32.0);
    const ComplexField u = random_field(g, 1);
    for (auto _ : state) benchmark::DoNotOptimize(forward(u));
}

void BM_frac_laplacian(benchmark::State& state) {
    const Grid g = make_grid(1, int(state.range(0)), 32.0);
    const ComplexField u = gaussian(g);
    const FractionalOrder s(0.5);
    for (auto _ : state) benchmark::DoNotOptimize(frac_laplacian(u, s));
}

void BM_strang_step(benchmark::State& state) {
    const Grid g = make_grid(1, int(state.range(0)), 32.0);
    const ComplexField u = gaussian(g);
    const SimParams p(FractionalOrder(0.5), CouplingConstant(-1.0), RegularizationLevel(0.1),
                      1e-3, 1.0, Scheme::strang, 1);
    for (auto _ : state) benchmark::DoNotOptimize(step(u, p));
}

void BM_gagliardo(benchmark::State& state) {
    const Grid g = make_grid(1, int(state.range(0)), 32.0);
    const ComplexField u = gaussian(g);
    const FractionalOrder s(0.5);
    for (auto _ : state) benchmark::DoNotOptimize(gagliardo_seminorm_sq(u, s));
}

void BM_singular_integral(benchmark::State& state) {
    const Grid g = make_grid(1, int(state.range(0)), 32.0);
    const ComplexField u = gaussian(g);
    const FractionalOrder s(0.5);
    for (auto _ : state) benchmark::DoNotOptimize(singular_integral_laplacian(u, s));
}

void BM_commutator(benchmark::State& state) {
    const Grid g = make_grid(1, int(state.range(0)), 32.0);
    const ComplexField u = gaussian(g);
    const FractionalOrder s(0.7);
    const MomentOrder alpha(1.0);
    for (auto _ : state) benchmark::DoNotOptimize(commutator_apply(u, s, alpha));
}

}  // namespace

BENCHMARK(BM_forward_1d)->Arg(128)->Arg(256)->Arg(512);
BENCHMARK(BM_forward_2d)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_frac_laplacian)->Arg(256)->Arg(512);
BENCHMARK(BM_strang_step)->Arg(256)->Arg(512);
BENCHMARK(BM_gagliardo)->Arg(128)->Arg(256)->Arg(512);
BENCHMARK(BM_singular_integral)->Arg(128)->Arg(256)->Arg(512);
BENCHMARK(BM_commutator)->Arg(256)->Arg(512);

BENCHMARK_MAIN();
