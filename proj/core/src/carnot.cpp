#include "emodes/carnot.hpp"

#include <numbers>

#include "emodes/info.hpp"

namespace emodes::carnot {

std::pair<RegimeSummary, RegimeSummary> table1_summary(PhiRatio phi, double frequency,
                                                       const PhysicalConstants& consts) {
    validate(consts);
    if (!std::isfinite(frequency) || frequency <= 0.0)
        throw std::domain_error("table1_summary: frequency must be finite and positive");

    const double n = occupancy(phi);
    const double quantum_energy = consts.h * frequency;

    RegimeSummary high{};
    high.regime = "high_occupation";
    high.applicable = n >= 100.0;
    high.temperature_kelvin = n * quantum_energy / consts.k_B;
    high.equilibrium_fraction = 0.5;
    high.avg_mode_entropy_kb = std::numbers::ln2;
    high.distribution = "power-law";
    high.carnot_role = "amplifier";

    RegimeSummary canonic{};
    canonic.regime = "canonic";
    canonic.applicable = n <= 0.01;
    canonic.temperature_kelvin = -quantum_energy / (consts.k_B * std::log(n));
    canonic.equilibrium_fraction = info::canonic_fraction(phi);
    canonic.avg_mode_entropy_kb = phi.value() * std::exp(-phi.value());
    canonic.distribution = "exponential";
    canonic.carnot_role = "heat engine";

    return {high, canonic};
}

}  // namespace emodes::carnot
