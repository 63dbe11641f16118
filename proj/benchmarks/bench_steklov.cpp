#include <benchmark/benchmark.h>

#include "steklov/corpus.hpp"
#include "steklov/norms.hpp"
#include "steklov/steklov.hpp"

namespace {

steklov::Field bench_field(std::size_t n_time) {
    const steklov::SpaceGrid space({65}, {1.0 / 64.0}, {0.0});
    const steklov::TimeGrid time(0.0, 1.0 / static_cast<double>(n_time - 1), n_time);
    return steklov::make_field(space, time,
                               steklov::random_smooth_sampler(7u, 4, space.ndim()));
}

void PrefixKernel(benchmark::State& state) {
    const auto field = bench_field(4097);
    const auto params =
        steklov::SteklovParams::from_steps(static_cast<std::size_t>(state.range(0)), field.time);
    for (auto _ : state) {
        auto out = steklov::steklov_average(field, params);
        benchmark::DoNotOptimize(out.values.data());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(field.values.size()));
}
BENCHMARK(PrefixKernel)->Arg(2)->Arg(16)->Arg(128)->Arg(1024);

void NaiveKernel(benchmark::State& state) {
    const auto field = bench_field(4097);
    const auto params =
        steklov::SteklovParams::from_steps(static_cast<std::size_t>(state.range(0)), field.time);
    for (auto _ : state) {
        auto out = steklov::naive_average(field, params);
        benchmark::DoNotOptimize(out.values.data());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(field.values.size()));
}
BENCHMARK(NaiveKernel)->Arg(2)->Arg(16)->Arg(128)->Arg(1024);

void BochnerNorm(benchmark::State& state) {
    const auto field = bench_field(4097);
    const steklov::BochnerSpec spec{steklov::Exponent(2.0), steklov::Exponent(2.0)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(steklov::bochner_norm(field, spec));
    }
}
BENCHMARK(BochnerNorm);

} // namespace

BENCHMARK_MAIN();
