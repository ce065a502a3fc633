#pragma once

/*
 * sim.hpp — Monte-Carlo exchange of indistinguishable quanta among modes.
 *
 * Q conserved quanta hop among M modes.  One step:
 *
 *   1. draw a mode uniformly among all M;
 *   2. if it is empty, the step is a self-transition (the draw is
 *      consumed, nothing moves);
 *   3. otherwise move one quantum to a target drawn uniformly from the
 *      other M−1 modes.
 *
 * Every feasible directed move then has probability 1/(M·(M−1)), so the
 * kernel is symmetric, hence doubly stochastic, and the stationary law
 * is uniform over the C(Q+M−1, Q) compositions — the counting measure
 * behind Bose statistics.  Single-mode marginals converge to the
 * geometric law with mean n̄ = Q/M, tying the empirical occupancies to
 * Φ = ln(1 + 1/n̄).
 *
 * Randomness comes from splitmix64 with a fixed rejection-based bounded
 * sampler, so trajectories are bit-identical for a given seed on every
 * platform.  A single chain is inherently serial; independent replicas
 * run concurrently and merge associatively.
 */

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "emodes/benford.hpp"

namespace emodes::sim {

inline constexpr const char* kRngAlgorithm = "splitmix64";
inline constexpr const char* kRngVersion = "1";

// splitmix64 (Steele & Lea's SplittableRandom finalizer).  64-bit state,
// one output per increment of the Weyl sequence.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform draw in [0, n) by rejecting the biased tail of 2^64 mod n.
    std::uint64_t bounded(std::uint64_t n) {
        if (n == 0) throw std::domain_error("SplitMix64::bounded: n must be positive");
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

private:
    std::uint64_t state_;
};

enum class Init { all_in_one, uniform };

// Default init is uniform: an all_in_one lump drains at rate 1/M per
// step (only a uniform mode draw that lands on it moves a quantum), so
// relaxing Q quanta out of one mode costs ~Q·M steps before sampling is
// meaningful.  all_in_one stays available for relaxation studies.
struct SimConfig {
    std::uint64_t modes = 1;     // M ≥ 1
    std::uint64_t quanta = 0;    // Q ≥ 0, conserved
    std::uint64_t steps = 0;
    std::uint64_t burn_in = 0;   // ≤ steps
    std::uint64_t seed = 0;
    Init init = Init::uniform;
};

void validate(const SimConfig& config);

struct SimState {
    std::vector<std::uint64_t> occupancies;
    std::uint64_t step_count = 0;
};

struct OccupancySummary {
    std::vector<std::uint64_t> histogram;  // histogram[v] = observations of occupancy v
    std::uint64_t snapshots = 0;           // retained composition snapshots
    std::uint64_t modes = 0;
    std::uint64_t quanta = 0;
    double mean = 0.0;                     // Q/M, an identity under conservation
    std::vector<double> reference;         // geometric pmf with mean Q/M
    double tv_distance = 0.0;              // total variation to the reference
};

// all_in_one puts every quantum in mode 0; uniform spreads ⌊Q/M⌋ per
// mode with the remainder going one each to the leftmost modes.
SimState init_state(const SimConfig& config);

// Advance one step.  Returns true when a quantum moved (exactly two
// entries changed by ±1), false on a self-transition.  With Q = 0 every
// draw lands on an empty mode, so the chain no-ops as it should.
bool step(SimState& state, SplitMix64& rng);

// Run the chain, discard burn_in steps, snapshot all occupancies every M
// steps (decorrelation stride), and score the pooled histogram against
// the geometric reference.  Conservation is checked at every snapshot.
// Deterministic given (config, seed).
OccupancySummary run(const SimConfig& config);

// Same, invoking the observer at every retained snapshot (trajectory
// dumps and the like).  The observer does not affect the result.
using SnapshotObserver = std::function<void(const SimState&)>;
OccupancySummary run(const SimConfig& config, const SnapshotObserver& on_snapshot);

// Run `replicas` independent chains with seeds derived from config.seed
// by consecutive splitmix64 outputs, merging the summaries.
OccupancySummary run_replicas(const SimConfig& config, std::size_t replicas);

// Geometric pmf P(n) = (1 − x)·x^n with x = n̄/(n̄ + 1), truncated once
// the cumulative mass reaches 1 − 1e-12.  Note −ln x = ln(1 + 1/n̄),
// matching phi_of_occupancy(n̄).
std::vector<double> geometric_reference(double mean);

// Pool two summaries of the same (M, Q) system: counts add, the distance
// is recomputed.  Associative and commutative.
OccupancySummary merge(const OccupancySummary& a, const OccupancySummary& b);

// First-digit histogram of the nonzero occupancies; exploratory (the
// equilibrium law for raw occupancies is geometric, not a digit-mode
// construction, so conformance is reported rather than asserted).
benford::DigitHistogram benford_of_occupancies(std::span<const std::uint64_t> occupancies);

// Same, over a value histogram (occupancy -> count).
benford::DigitHistogram benford_of_histogram(std::span<const std::uint64_t> histogram);

}  // namespace emodes::sim
