#include <benchmark/benchmark.h>

#include "slicekit/flow.hpp"
#include "slicekit/groebner.hpp"
#include "slicekit/kernel.hpp"
#include "slicekit/parse.hpp"

namespace {

using namespace slicekit;

VarContext xyz() { return VarContext({"x", "y", "z"}); }

void BM_polynomial_multiply(benchmark::State& state) {
    const VarContext ctx = xyz();
    const Polynomial p = parse_polynomial("x^2 + 2*x*y + y^2 + z", ctx);
    Polynomial q = Polynomial::one(ctx);
    for (int k = 0; k < static_cast<int>(state.range(0)); ++k) q = q * p;
    for (auto _ : state) {
        benchmark::DoNotOptimize(q * q);
    }
}
BENCHMARK(BM_polynomial_multiply)->Arg(2)->Arg(4)->Arg(6);

void BM_slice_expansion(benchmark::State& state) {
    const VarContext ctx = xyz();
    const Derivation d(ctx, {parse_polynomial("0", ctx), parse_polynomial("x", ctx),
                             parse_polynomial("1", ctx)});
    const Polynomial s = parse_polynomial("z", ctx);
    const Polynomial b =
        parse_polynomial("y*z + z^2 + x*y^2*z^3", ctx).powered(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(slice_expansion(d, s, b));
    }
}
BENCHMARK(BM_slice_expansion)->Arg(1)->Arg(2)->Arg(3);

void BM_kernel_matrix(benchmark::State& state) {
    const VarContext ctx = xyz();
    const Derivation d(ctx, {parse_polynomial("0", ctx), parse_polynomial("x", ctx),
                             parse_polynomial("1", ctx)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel_basis(d, static_cast<unsigned>(state.range(0))));
    }
}
BENCHMARK(BM_kernel_matrix)->Arg(4)->Arg(6)->Arg(8);

void BM_buchberger(benchmark::State& state) {
    const VarContext ctx = xyz();
    const std::vector<Polynomial> gens = {parse_polynomial("x^2*z - y^2", ctx),
                                          parse_polynomial("x^3 - y*z", ctx)};
    const MonomialOrder order = MonomialOrder::grlex(ctx.size());
    for (auto _ : state) {
        benchmark::DoNotOptimize(buchberger(gens, order));
    }
}
BENCHMARK(BM_buchberger);

}  // namespace

BENCHMARK_MAIN();
