#include "emodes/sim.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <string>

namespace emodes::sim {

namespace {

constexpr double kTailMass = 1e-12;
constexpr std::size_t kMaxReferenceLength = std::size_t{1} << 27;

void record_snapshot(const SimState& state, std::uint64_t quanta,
                     std::vector<std::uint64_t>& histogram) {
    std::uint64_t sum = 0;
    for (std::uint64_t n : state.occupancies) {
        if (n >= histogram.size()) histogram.resize(n + 1, 0);
        ++histogram[n];
        sum += n;
    }
    if (sum != quanta)
        throw std::logic_error("sim: quanta conservation violated at step " +
                               std::to_string(state.step_count));
}

double tv_distance(const std::vector<std::uint64_t>& histogram, std::uint64_t mass,
                   const std::vector<double>& reference) {
    const auto len = std::max(histogram.size(), reference.size());
    double sum = 0.0;
    for (std::size_t v = 0; v < len; ++v) {
        const double emp =
            v < histogram.size() ? static_cast<double>(histogram[v]) / static_cast<double>(mass)
                                 : 0.0;
        const double ref = v < reference.size() ? reference[v] : 0.0;
        sum += std::abs(emp - ref);
    }
    return 0.5 * sum;
}

OccupancySummary summarize(std::vector<std::uint64_t> histogram, std::uint64_t snapshots,
                           const SimConfig& config) {
    OccupancySummary summary;
    summary.histogram = std::move(histogram);
    summary.snapshots = snapshots;
    summary.modes = config.modes;
    summary.quanta = config.quanta;
    summary.mean = static_cast<double>(config.quanta) / static_cast<double>(config.modes);

    // Σ v·count must equal Q·snapshots — conservation makes the mean an
    // identity, not a statistic.
    std::uint64_t weighted = 0;
    for (std::size_t v = 0; v < summary.histogram.size(); ++v)
        weighted += static_cast<std::uint64_t>(v) * summary.histogram[v];
    if (weighted != config.quanta * snapshots)
        throw std::logic_error("sim: histogram mass inconsistent with conserved quanta");

    if (config.quanta == 0)
        summary.reference = {1.0};
    else
        summary.reference = geometric_reference(summary.mean);
    summary.tv_distance =
        tv_distance(summary.histogram, config.modes * snapshots, summary.reference);
    return summary;
}

}  // namespace

void validate(const SimConfig& config) {
    if (config.modes < 1) throw std::domain_error("SimConfig: need at least one mode");
    if (config.burn_in > config.steps)
        throw std::domain_error("SimConfig: burn_in must not exceed steps");
}

SimState init_state(const SimConfig& config) {
    validate(config);
    SimState state;
    state.occupancies.assign(config.modes, 0);
    switch (config.init) {
        case Init::all_in_one:
            state.occupancies[0] = config.quanta;
            break;
        case Init::uniform: {
            const std::uint64_t share = config.quanta / config.modes;
            const std::uint64_t remainder = config.quanta % config.modes;
            for (std::uint64_t m = 0; m < config.modes; ++m)
                state.occupancies[m] = share + (m < remainder ? 1 : 0);
            break;
        }
    }
    return state;
}

bool step(SimState& state, SplitMix64& rng) {
    const std::uint64_t m = state.occupancies.size();
    ++state.step_count;
    if (m < 2) return false;

    const std::uint64_t donor = rng.bounded(m);
    if (state.occupancies[donor] == 0) return false;  // self-transition

    std::uint64_t target = rng.bounded(m - 1);
    if (target >= donor) ++target;
    --state.occupancies[donor];
    ++state.occupancies[target];
    return true;
}

OccupancySummary run(const SimConfig& config) { return run(config, SnapshotObserver{}); }

OccupancySummary run(const SimConfig& config, const SnapshotObserver& on_snapshot) {
    validate(config);
    const std::uint64_t stride = config.modes;
    if (config.steps - config.burn_in < stride)
        throw std::domain_error("sim::run: fewer than one snapshot after burn-in "
                                "(need steps - burn_in >= modes)");

    SimState state = init_state(config);
    SplitMix64 rng(config.seed);
    std::vector<std::uint64_t> histogram;
    std::uint64_t snapshots = 0;

    for (std::uint64_t s = 1; s <= config.steps; ++s) {
        step(state, rng);
        if (s > config.burn_in && (s - config.burn_in) % stride == 0) {
            record_snapshot(state, config.quanta, histogram);
            ++snapshots;
            if (on_snapshot) on_snapshot(state);
        }
    }
    return summarize(std::move(histogram), snapshots, config);
}

OccupancySummary run_replicas(const SimConfig& config, std::size_t replicas) {
    if (replicas == 0) throw std::domain_error("run_replicas: need at least one replica");
    if (replicas == 1) return run(config);

    SplitMix64 seeder(config.seed);
    std::vector<SimConfig> configs(replicas, config);
    for (SimConfig& c : configs) c.seed = seeder.next();

    std::vector<std::future<OccupancySummary>> futures;
    futures.reserve(replicas);
    for (const SimConfig& c : configs)
        futures.push_back(std::async(std::launch::async, [c] { return run(c); }));

    OccupancySummary merged = futures.front().get();
    for (std::size_t r = 1; r < replicas; ++r) merged = merge(merged, futures[r].get());
    return merged;
}

std::vector<double> geometric_reference(double mean) {
    if (!std::isfinite(mean) || mean <= 0.0)
        throw std::domain_error("geometric_reference: mean must be finite and positive");
    const double x = mean / (mean + 1.0);
    const std::size_t length =
        static_cast<std::size_t>(std::ceil(std::log(kTailMass) / std::log(x))) + 1;
    if (length > kMaxReferenceLength)
        throw std::domain_error("geometric_reference: mean too large for tabulation");

    std::vector<double> pmf;
    pmf.reserve(length);
    double p = 1.0 - x;
    double cumulative = 0.0;
    while (cumulative < 1.0 - kTailMass) {
        pmf.push_back(p);
        cumulative += p;
        p *= x;
    }
    return pmf;
}

OccupancySummary merge(const OccupancySummary& a, const OccupancySummary& b) {
    if (a.modes != b.modes || a.quanta != b.quanta)
        throw std::invalid_argument("merge: summaries describe different systems");
    OccupancySummary out = a;
    if (b.histogram.size() > out.histogram.size()) out.histogram.resize(b.histogram.size(), 0);
    for (std::size_t v = 0; v < b.histogram.size(); ++v) out.histogram[v] += b.histogram[v];
    out.snapshots += b.snapshots;
    out.tv_distance = tv_distance(out.histogram, out.modes * out.snapshots, out.reference);
    return out;
}

benford::DigitHistogram benford_of_occupancies(std::span<const std::uint64_t> occupancies) {
    benford::DigitHistogram hist(10);
    for (std::uint64_t n : occupancies) {
        if (n == 0) continue;
        hist.add_decimal(std::to_string(n));
    }
    if (hist.total == 0)
        throw std::domain_error("benford_of_occupancies: no nonzero occupancies");
    return hist;
}

benford::DigitHistogram benford_of_histogram(std::span<const std::uint64_t> histogram) {
    benford::DigitHistogram hist(10);
    for (std::size_t v = 1; v < histogram.size(); ++v) {
        if (histogram[v] == 0) continue;
        const auto digit = benford::first_digit(std::to_string(v));
        hist.counts[static_cast<std::size_t>(*digit - 1)] += histogram[v];
        hist.total += histogram[v];
    }
    if (hist.total == 0)
        throw std::domain_error("benford_of_histogram: no nonzero occupancies");
    return hist;
}

}  // namespace emodes::sim
