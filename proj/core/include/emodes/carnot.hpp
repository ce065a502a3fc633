#pragma once

/*
 * carnot.hpp — Hook-law oscillator energetics and Carnot amplification.
 *
 * A single macroscopic oscillator of energy E = ½κA² behaves as one
 * high-occupation mode: q = k_B·T, so its effective temperature is
 * T = E/k_B (enormous for lasers and antennas — a 0.7 µm mode holding
 * 10^16 photons sits near 2·10^20 K).  Raising the amplitude from E_L to
 * E_H needs work W ≥ E_H − E_L, with equality for resonant pumping, and
 *
 *     W_min / E_H = 1 − E_L/E_H = 1 − T_L/T_H,
 *
 * the Carnot efficiency between the two effective temperatures.  The
 * regime summary tabulates both limiting columns of the mode
 * thermodynamics at a given Φ, flagging which (if either) applies.
 */

#include <cmath>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "emodes/constants.hpp"
#include "emodes/modes.hpp"

namespace emodes::carnot {

struct HookOscillator {
    double kappa;      // spring constant [N/m], > 0
    double amplitude;  // [m], ≥ 0

    HookOscillator(double k, double a) : kappa(k), amplitude(a) {
        if (!std::isfinite(k) || k <= 0.0)
            throw std::domain_error("HookOscillator: spring constant must be positive");
        if (!std::isfinite(a) || a < 0.0)
            throw std::domain_error("HookOscillator: amplitude must be non-negative");
    }
};

// E = ½κA²  [J]
inline double hook_energy(const HookOscillator& osc) {
    return 0.5 * osc.kappa * osc.amplitude * osc.amplitude;
}

// Effective single-mode temperature T = E/k_B  [K]
inline double oscillator_temperature(double energy, const PhysicalConstants& consts = {}) {
    validate(consts);
    if (!std::isfinite(energy) || energy < 0.0)
        throw std::domain_error("oscillator_temperature: energy must be non-negative");
    return energy / consts.k_B;
}

// Carnot efficiency 1 − T_L/T_H ∈ [0, 1) for 0 < T_L ≤ T_H.
inline double carnot_efficiency(double t_low, double t_high) {
    if (!std::isfinite(t_low) || !std::isfinite(t_high) || t_low <= 0.0 || t_high <= 0.0)
        throw std::domain_error("carnot_efficiency: temperatures must be finite and positive");
    if (t_low > t_high)
        throw std::domain_error("carnot_efficiency: need T_L <= T_H");
    return 1.0 - t_low / t_high;
}

// Minimum (resonant) work to amplify a mode from E_L to E_H.
inline double min_work(double energy_low, double energy_high) {
    if (!std::isfinite(energy_low) || !std::isfinite(energy_high) || energy_low < 0.0)
        throw std::domain_error("min_work: energies must be finite and non-negative");
    if (energy_high < energy_low)
        throw std::domain_error("min_work: need E_H >= E_L");
    return energy_high - energy_low;
}

// One column of the two-regime summary table, evaluated at a given Φ.
struct RegimeSummary {
    std::string_view regime;            // "high_occupation" or "canonic"
    bool applicable;                    // limit formula trustworthy at this Φ
    double temperature_kelvin;          // n·hν/k_B  vs  −hν/(k_B·ln n)
    double equilibrium_fraction;        // 1/2       vs  1/(1 + e^Φ)
    double avg_mode_entropy_kb;         // ln 2      vs  Φ·e^(−Φ)
    std::string_view distribution;      // "power-law" vs "exponential"
    std::string_view carnot_role;       // "amplifier" vs "heat engine"
};

// Evaluate both limiting columns at Φ for a mode of the given frequency.
// Applicability follows the regime thresholds (n ≥ 100 high-occupation,
// n ≤ 0.01 canonic); in between, both columns carry a warning flag.
std::pair<RegimeSummary, RegimeSummary> table1_summary(PhiRatio phi, double frequency,
                                                       const PhysicalConstants& consts = {});

}  // namespace emodes::carnot
