#pragma once

/*
 * powerlaw.hpp — the occupancy curve on log-log axes.
 *
 * For modes in equilibrium at a common temperature, n(Φ) = 1/(e^Φ − 1).
 * On (ln Φ, ln n) axes the curve has analytic slope
 *
 *     d ln n / d ln Φ = −Φ·e^Φ / (e^Φ − 1)
 *
 * which tends to −1 as Φ → 0 (the power-law regime) and to −Φ as
 * Φ → ∞ (exponential truncation).  Re-expressing the abscissa as a field
 * amplitude, Φ ∝ E², halves ln Φ and therefore doubles every slope: the
 * power-law regime reads −2.
 *
 * Slope orientation is d ln n/d ln Φ throughout (occupancy on the
 * ordinate).  Fitting is ordinary least squares; the samples are exact
 * curve points, not heavy-tailed empirical data.
 */

#include <span>
#include <vector>

#include "emodes/modes.hpp"

namespace emodes::powerlaw {

// One point of the log-log curve: abscissa ln Φ (or ln E after the field
// transform), ordinate ln n.
struct LogLogSample {
    double ln_phi;
    double ln_n;
};

struct SlopeEstimate {
    double slope;
    double phi_lo;    // fitted window, abscissa units of the samples
    double phi_hi;
    double residual;  // RMS residual of the linear fit
};

enum class Spacing { log, linear };

// Samples n(Φ) over [phi_lo, phi_hi], log-spaced by default.
std::vector<LogLogSample> curve(double phi_lo, double phi_hi, std::size_t points,
                                Spacing spacing = Spacing::log);

// Analytic d ln n/d ln Φ = −Φ·e^Φ/(e^Φ − 1).
double local_slope(PhiRatio phi);

// Re-express the abscissa as ln E = ln Φ / 2 (Φ ∝ E²); doubles slopes.
std::vector<LogLogSample> field_transform(std::span<const LogLogSample> samples);

// OLS of ln_n on the abscissa over samples whose abscissa value
// (exp(ln_phi)) lies in [x_lo, x_hi].  Requires at least 3 in-window
// samples.
SlopeEstimate fit_slope(std::span<const LogLogSample> samples, double x_lo, double x_hi);

}  // namespace emodes::powerlaw
