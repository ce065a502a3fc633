#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "emodes/benford.hpp"
#include "emodes/info.hpp"
#include "emodes/modes.hpp"
#include "emodes/powerlaw.hpp"
#include "emodes/sim.hpp"

using namespace emodes;

static void BM_Occupancy(benchmark::State& state) {
    double phi = 1e-6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(occupancy(PhiRatio(phi)));
        phi = phi < 30.0 ? phi * 1.0001 : 1e-6;
    }
}
BENCHMARK(BM_Occupancy);

static void BM_PhiOfOccupancy(benchmark::State& state) {
    double n = 1e-8;
    for (auto _ : state) {
        benchmark::DoNotOptimize(phi_of_occupancy(n));
        n = n < 1e12 ? n * 1.001 : 1e-8;
    }
}
BENCHMARK(BM_PhiOfOccupancy);

static void BM_ShannonInformation(benchmark::State& state) {
    const auto method = state.range(0) == 0 ? info::InfoMethod::stirling
                                            : info::InfoMethod::exact;
    const info::BitFileStats stats(1000000, 300000);
    for (auto _ : state)
        benchmark::DoNotOptimize(info::shannon_information(stats, method));
}
BENCHMARK(BM_ShannonInformation)->Arg(0)->Arg(1);

static void BM_BitStatsFromText(benchmark::State& state) {
    std::string stream;
    stream.reserve(static_cast<std::size_t>(state.range(0)));
    for (std::int64_t i = 0; i < state.range(0); ++i)
        stream.push_back(i % 3 == 0 ? '1' : '0');
    for (auto _ : state)
        benchmark::DoNotOptimize(info::bit_stats_from_text(stream));
    state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BitStatsFromText)->Range(1 << 10, 1 << 20);

static void BM_FirstDigitDecimal(benchmark::State& state) {
    const std::vector<std::string> tokens = {"123.456", "-0.00987", "8.1e22", "70001",
                                             "0.5",     "-9120",    "3e-9"};
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(benford::first_digit(tokens[i % tokens.size()]));
        ++i;
    }
}
BENCHMARK(BM_FirstDigitDecimal);

static void BM_FirstDigitDouble(benchmark::State& state) {
    double x = 1.2345e-7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(benford::first_digit(x, 10));
        x = x < 1e30 ? x * 1.7 : 1.2345e-7;
    }
}
BENCHMARK(BM_FirstDigitDouble);

static void BM_Conformance(benchmark::State& state) {
    benford::DigitHistogram hist(10);
    const auto ref = benford::pmf(10);
    for (std::size_t d = 0; d < 9; ++d)
        hist.counts[d] = static_cast<std::uint64_t>(1e6 * ref.probs[d]);
    hist.total = 0;
    for (auto c : hist.counts) hist.total += c;
    for (auto _ : state)
        benchmark::DoNotOptimize(benford::conformance(hist, ref));
}
BENCHMARK(BM_Conformance);

static void BM_CurveAndFit(benchmark::State& state) {
    for (auto _ : state) {
        const auto samples = powerlaw::curve(1e-4, 1e-2, static_cast<std::size_t>(state.range(0)));
        benchmark::DoNotOptimize(powerlaw::fit_slope(samples, 1e-4, 1e-2));
    }
}
BENCHMARK(BM_CurveAndFit)->Arg(50)->Arg(500);

static void BM_SimStep(benchmark::State& state) {
    sim::SimConfig cfg;
    cfg.modes = static_cast<std::uint64_t>(state.range(0));
    cfg.quanta = cfg.modes * 5;
    cfg.init = sim::Init::uniform;
    auto chain = sim::init_state(cfg);
    sim::SplitMix64 rng(7);
    for (auto _ : state)
        benchmark::DoNotOptimize(sim::step(chain, rng));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SimStep)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_SimRun(benchmark::State& state) {
    sim::SimConfig cfg;
    cfg.modes = 1000;
    cfg.quanta = 5000;
    cfg.steps = static_cast<std::uint64_t>(state.range(0));
    cfg.burn_in = cfg.steps / 10;
    cfg.seed = 42;
    for (auto _ : state)
        benchmark::DoNotOptimize(sim::run(cfg));
}
BENCHMARK(BM_SimRun)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
