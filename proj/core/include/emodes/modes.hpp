#pragma once

/*
 * modes.hpp — Bose–Einstein mode statistics in the general case and in
 * both limits.
 *
 * Everything is driven by the dimensionless ratio
 *
 *     Φ = hν / k_B·T,
 *
 * the quantum energy relative to the thermal energy scale.  The mean
 * occupancy of a mode at zero chemical potential is
 *
 *     n(Φ) = 1 / (e^Φ − 1),            Φ(n) = ln(1 + 1/n),
 *
 * mutual inverses.  Two limits:
 *
 *   quantum limit        Φ ≫ 1, n ≪ 1:   n ≈ e^(−Φ)  (canonic statistics),
 *                                        per-mode entropy −n·ln n  [k_B]
 *   high-occupation      Φ ≪ 1, n ≫ 1:   n ≈ 1/Φ, q = n·hν = k_B·T,
 *   (classical) limit                    per-mode entropy exactly 1  [k_B]
 *
 * The full Bose–Einstein per-mode entropy (1+n)·ln(1+n) − n·ln n is kept
 * as the reference curve interpolating both limits; it is not part of the
 * two-limit algebra but validates it.
 *
 * Entropies are dimensionless multiples of k_B throughout; conversion to
 * J/K happens only at reporting boundaries.
 */

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "emodes/constants.hpp"

namespace emodes {

// Φ = hν/k_B·T.  Finite and strictly positive: Φ = 0 would mean infinite
// occupancy, Φ = ∞ an empty mode.
class PhiRatio {
public:
    explicit PhiRatio(double value) : value_(value) {
        if (!std::isfinite(value) || value <= 0.0)
            throw std::domain_error("PhiRatio: phi must be finite and positive");
    }
    double value() const { return value_; }

private:
    double value_;
};

// A single mode: frequency and mean occupancy.  Occupancy 0 is allowed
// (vacancies in modulated sequences); such modes carry no entropy and
// reject temperature queries.
struct Mode {
    double frequency;  // [Hz], finite and positive
    double occupancy;  // dimensionless, finite and non-negative

    Mode(double freq, double n) : frequency(freq), occupancy(n) {
        if (!std::isfinite(freq) || freq <= 0.0)
            throw std::domain_error("Mode: frequency must be finite and positive");
        if (!std::isfinite(n) || n < 0.0)
            throw std::domain_error("Mode: occupancy must be finite and non-negative");
    }
};

// An ordered sequence of Λ ≥ 1 modes.
struct ModeEnsemble {
    std::vector<Mode> modes;

    explicit ModeEnsemble(std::vector<Mode> m) : modes(std::move(m)) {
        if (modes.empty())
            throw std::invalid_argument("ModeEnsemble: at least one mode required");
    }
    std::size_t size() const { return modes.size(); }
};

enum class Regime { quantum, classical, exact };

// Auto-selection thresholds keep the limit-formula error below 1%:
// classical for n ≥ 100, quantum for n ≤ 0.01, exact in between.
inline Regime select_regime(double occupancy) {
    if (occupancy >= 100.0) return Regime::classical;
    if (occupancy <= 0.01 && occupancy > 0.0) return Regime::quantum;
    return Regime::exact;
}

// n(Φ) = 1/(e^Φ − 1).  expm1 avoids cancellation at small Φ.
inline double occupancy(PhiRatio phi) {
    return 1.0 / std::expm1(phi.value());
}

// Canonic (quantum-limit) approximation n ≈ e^(−Φ), valid for Φ ≫ 1.
inline double canonic_occupancy(PhiRatio phi) {
    return std::exp(-phi.value());
}

// Φ(n) = ln(1 + 1/n), the exact inverse of occupancy().  n = 0 maps to
// Φ = ∞ and is rejected.
inline PhiRatio phi_of_occupancy(double n) {
    if (!std::isfinite(n) || n <= 0.0)
        throw std::domain_error("phi_of_occupancy: occupancy must be finite and positive");
    return PhiRatio(std::log1p(1.0 / n));
}

// T = hν / (k_B·ln(1 + 1/n)).  Reduces to −hν/(k_B·ln n) for n ≪ 1 and
// to n·hν/k_B for n ≫ 1.
inline double mode_temperature(double n, double frequency,
                               const PhysicalConstants& consts = {}) {
    validate(consts);
    if (!std::isfinite(frequency) || frequency <= 0.0)
        throw std::domain_error("mode_temperature: frequency must be finite and positive");
    return consts.h * frequency / (consts.k_B * phi_of_occupancy(n).value());
}

// Per-mode entropy in units of k_B.
//   quantum:   −n·ln n             (requires 0 < n < 1)
//   classical: 1                   (harmonic oscillator, any n > 0)
//   exact:     (1+n)·ln(1+n) − n·ln n
// The classical value deliberately under-counts the exact entropy by
// ~ln n at n ≫ 1: one oscillator carries one k_B regardless of how many
// quanta it holds.
inline double mode_entropy(double n, Regime regime) {
    if (!std::isfinite(n) || n <= 0.0)
        throw std::domain_error("mode_entropy: occupancy must be finite and positive");
    switch (regime) {
        case Regime::quantum:
            if (n >= 1.0)
                throw std::domain_error("mode_entropy: quantum regime requires occupancy < 1");
            return -n * std::log(n);
        case Regime::classical:
            return 1.0;
        case Regime::exact:
            // (1+n)ln(1+n) − n·ln n, regrouped as n·ln(1+1/n) + ln(1+n)
            // to avoid cancellation between the large-n terms
            return n * std::log1p(1.0 / n) + std::log1p(n);
    }
    throw std::invalid_argument("mode_entropy: unknown regime");
}

// Total entropy of an ensemble in units of k_B: the sum of per-mode
// entropies.  Vacancies (n = 0) contribute zero in every regime.  In the
// classical regime the result is exactly Λ_occupied, a lower bound of
// the entropy once vacancies are mixed in.
inline double ensemble_entropy(const ModeEnsemble& ensemble, Regime regime) {
    double total = 0.0;
    for (const Mode& m : ensemble.modes) {
        if (m.occupancy == 0.0) continue;
        total += mode_entropy(m.occupancy, regime);
    }
    return total;
}

}  // namespace emodes
