#include "qccs/construction.hpp"
#include "qccs/correlation.hpp"
#include "qccs/sequence.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

qccs::PhaseSequence random_sequence(std::mt19937& rng, int lambda, std::size_t length) {
    std::uniform_int_distribution<int> phase(0, lambda - 1);
    qccs::PhaseSequence s(lambda, length);
    for (std::size_t i = 0; i < length; ++i) {
        s.set(i, phase(rng));
    }
    return s;
}

void BM_AccfHistogram(benchmark::State& state) {
    std::mt19937 rng(1);
    const auto L = static_cast<std::size_t>(state.range(0));
    const auto a = random_sequence(rng, 6, L);
    const auto b = random_sequence(rng, 6, L);
    for (auto _ : state) {
        for (std::int64_t tau = 1 - static_cast<std::int64_t>(L); tau < static_cast<std::int64_t>(L); ++tau) {
            benchmark::DoNotOptimize(qccs::accf_histogram(a, b, tau));
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(L * L));
}
BENCHMARK(BM_AccfHistogram)->Arg(27)->Arg(81)->Arg(243)->Arg(729);

void BM_BuildQccs(benchmark::State& state) {
    const auto params = qccs::Params::make(3, static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 3);
    const auto seed = qccs::canonical_seed(params);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qccs::build_qccs(seed, 1));
    }
}
BENCHMARK(BM_BuildQccs)->Args({3, 2})->Args({4, 2})->Args({5, 1});

void BM_FamilyReport(benchmark::State& state) {
    const auto params = qccs::Params::make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                                           static_cast<int>(state.range(2)), static_cast<int>(state.range(0)));
    const auto family = qccs::build_qccs(qccs::canonical_seed(params), 1);
    qccs::ReportOptions opts;
    opts.threads = static_cast<unsigned>(state.range(3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qccs::family_report(family.codes, opts));
    }
}
BENCHMARK(BM_FamilyReport)->Args({3, 2, 1, 1})->Args({3, 3, 2, 1})->Args({3, 3, 2, 4})->Unit(benchmark::kMillisecond);

void BM_VerifyExact(benchmark::State& state) {
    const auto family = qccs::build_qccs(qccs::canonical_seed(qccs::Params::make(3, 3, 1, 6)), 1);
    qccs::ReportOptions opts;
    opts.exact = true;
    opts.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qccs::verify_family(family.codes, family.descriptor.theta_bound, opts));
    }
}
BENCHMARK(BM_VerifyExact)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
