#pragma once

#include <cmath>
#include <stdexcept>

namespace emodes {

// Fundamental constants in SI units (CODATA 2018 exact values).
// Chemical potential is fixed at zero throughout: photons and other
// inert quanta are modelled as bosons with no particle-number cost.
struct PhysicalConstants {
    double k_B = 1.380649e-23;    // Boltzmann constant [J/K]
    double h = 6.62607015e-34;    // Planck constant [J*s]
    double c = 299792458.0;       // speed of light [m/s]
};

inline void validate(const PhysicalConstants& pc) {
    if (!(std::isfinite(pc.k_B) && pc.k_B > 0.0) ||
        !(std::isfinite(pc.h) && pc.h > 0.0) ||
        !(std::isfinite(pc.c) && pc.c > 0.0))
        throw std::domain_error("PhysicalConstants: all constants must be finite and positive");
}

}  // namespace emodes
