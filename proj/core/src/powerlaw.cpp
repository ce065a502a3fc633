#include "emodes/powerlaw.hpp"

#include <cmath>
#include <stdexcept>

namespace emodes::powerlaw {

std::vector<LogLogSample> curve(double phi_lo, double phi_hi, std::size_t points,
                                Spacing spacing) {
    PhiRatio lo(phi_lo);
    PhiRatio hi(phi_hi);
    if (!(phi_lo < phi_hi)) throw std::domain_error("curve: need phi_lo < phi_hi");
    if (points < 2) throw std::domain_error("curve: need at least 2 points");

    std::vector<LogLogSample> samples;
    samples.reserve(points);
    const double n1 = static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / n1;
        double phi;
        if (spacing == Spacing::log)
            phi = std::exp(std::log(phi_lo) + t * (std::log(phi_hi) - std::log(phi_lo)));
        else
            phi = phi_lo + t * (phi_hi - phi_lo);
        samples.push_back({std::log(phi), std::log(occupancy(PhiRatio(phi)))});
    }
    return samples;
}

double local_slope(PhiRatio phi) {
    const double p = phi.value();
    return -p * std::exp(p) / std::expm1(p);
}

std::vector<LogLogSample> field_transform(std::span<const LogLogSample> samples) {
    std::vector<LogLogSample> out;
    out.reserve(samples.size());
    for (const LogLogSample& s : samples) out.push_back({0.5 * s.ln_phi, s.ln_n});
    return out;
}

SlopeEstimate fit_slope(std::span<const LogLogSample> samples, double x_lo, double x_hi) {
    if (!(x_lo > 0.0 && x_lo < x_hi))
        throw std::domain_error("fit_slope: need 0 < x_lo < x_hi");
    const double ln_lo = std::log(x_lo);
    const double ln_hi = std::log(x_hi);

    std::vector<LogLogSample> in_window;
    for (const LogLogSample& s : samples)
        if (s.ln_phi >= ln_lo && s.ln_phi <= ln_hi) in_window.push_back(s);
    if (in_window.size() < 3)
        throw std::domain_error("fit_slope: need at least 3 samples inside the window");

    const double n = static_cast<double>(in_window.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (const LogLogSample& s : in_window) {
        mean_x += s.ln_phi;
        mean_y += s.ln_n;
    }
    mean_x /= n;
    mean_y /= n;

    double sxx = 0.0, sxy = 0.0;
    for (const LogLogSample& s : in_window) {
        const double dx = s.ln_phi - mean_x;
        sxx += dx * dx;
        sxy += dx * (s.ln_n - mean_y);
    }
    if (sxx == 0.0) throw std::domain_error("fit_slope: degenerate window (no abscissa spread)");
    const double slope = sxy / sxx;
    const double intercept = mean_y - slope * mean_x;

    double ss = 0.0;
    for (const LogLogSample& s : in_window) {
        const double r = s.ln_n - (slope * s.ln_phi + intercept);
        ss += r * r;
    }
    return SlopeEstimate{slope, x_lo, x_hi, std::sqrt(ss / n)};
}

}  // namespace emodes::powerlaw
