#include <benchmark/benchmark.h>

#include "binform/covariant.hpp"
#include "binform/dimension.hpp"
#include "binform/form.hpp"
#include "binform/linalg.hpp"
#include "binform/mpoly.hpp"

using namespace binform;

static MPoly dense_poly(int vars, int deg) {
    MPoly p(1);
    for (int v = 0; v < vars; ++v)
        p = p * (MPoly::variable("v" + std::to_string(v)) + MPoly(1)).pow(deg);
    return p;
}

static void BM_mpoly_mul(benchmark::State& state) {
    MPoly a = dense_poly(static_cast<int>(state.range(0)), 2);
    MPoly b = dense_poly(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        MPoly c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_mpoly_mul)->Arg(2)->Arg(3)->Arg(4);

static void BM_bareiss_generic_sylvester(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Form f = Form::generic(n);
    for (auto _ : state) {
        MPoly r = resultant(f, derivative(f));
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_bareiss_generic_sylvester)->Arg(3)->Arg(4)->Arg(5);

static void BM_transvectant_quartic(benchmark::State& state) {
    Form f = Form::generic(4);
    for (auto _ : state) {
        Form t = transvectant(f, f, 2);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_transvectant_quartic);

static void BM_dimension_oracle(benchmark::State& state) {
    for (auto _ : state) {
        long total = 0;
        for (int nu = 0; nu <= 6; ++nu)
            for (int w = 0; w <= 12; ++w) total += brute_force_N(6, nu, w);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_dimension_oracle);

static void BM_discriminant_quartic_numeric(benchmark::State& state) {
    Form f = Form::from_rats({Rat(1), Rat(0), Rat(-5), Rat(0), Rat(4)});
    for (auto _ : state) {
        MPoly d = discriminant_general(f);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_discriminant_quartic_numeric);

BENCHMARK_MAIN();
