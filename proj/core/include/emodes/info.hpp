#pragma once

/*
 * info.hpp — Shannon information, the Boltzmann H-function, and the
 * Clausius inequality for binary files.
 *
 * A file of Λ modes with L energetic bits (p = L/Λ) admits C(Λ, L)
 * distinct messages.  In nats:
 *
 *     I_exact    = ln C(Λ, L)
 *     I_stirling = Λ·lnΛ − L·lnL − (Λ−L)·ln(Λ−L)
 *                = −Λ·{p·ln p + (1−p)·ln(1−p)}
 *
 * The H-function is the signed mixing entropy
 *
 *     H = Λ·{p·ln p + (1−p)·ln(1−p)}   [k_B]   (≤ 0, minimum at p = 1/2)
 *
 * so −H equals the Stirling information numerically.  The Clausius
 * inequality for informatics is S ≥ K·I with K = m·k_B; its normalized,
 * constant-free form is
 *
 *     −H/S = −{p·ln p + (1−p)·ln(1−p)} / ln 2  ∈ [0, 1],
 *
 * with equality to 1 only at p = 1/2.  The two-level equilibrium fraction
 * follows the canonic ratio p/(1−p) = e^(−Φ).
 *
 * Convention: 0·ln 0 ≡ 0 everywhere.
 */

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string_view>

#include "emodes/modes.hpp"

namespace emodes::info {

// Summary of a binary file: Λ modes, L of them energetic.
struct BitFileStats {
    std::uint64_t length;  // Λ ≥ 1
    std::uint64_t ones;    // 0 ≤ L ≤ Λ

    BitFileStats(std::uint64_t lambda, std::uint64_t l) : length(lambda), ones(l) {
        if (lambda < 1)
            throw std::domain_error("BitFileStats: length must be >= 1");
        if (l > lambda)
            throw std::domain_error("BitFileStats: ones must not exceed length");
    }
    double fraction() const { return static_cast<double>(ones) / static_cast<double>(length); }
};

// Information in nats; non-negative and finite by construction.
struct InfoNats {
    double value;

    explicit InfoNats(double nats) : value(nats) {
        if (!std::isfinite(nats) || nats < 0.0)
            throw std::domain_error("InfoNats: information must be finite and non-negative");
    }
};

// Entropy budget for the Clausius check S ≥ K·I, K = m·k_B.
struct EntropyBudget {
    double entropy_kb;       // S in units of k_B
    int per_bit_multiplier;  // m ≥ 1, so K = m·k_B
    InfoNats information;

    EntropyBudget(double s_kb, int m, InfoNats i)
        : entropy_kb(s_kb), per_bit_multiplier(m), information(i) {
        if (m < 1)
            throw std::domain_error("EntropyBudget: per-bit multiplier must be >= 1");
        if (!std::isfinite(s_kb))
            throw std::domain_error("EntropyBudget: entropy must be finite");
    }
};

struct ClausiusResult {
    bool holds;        // S ≥ K·I
    double margin_kb;  // S − K·I, negative when violated
};

enum class InfoMethod { stirling, exact };

namespace detail {
// x·ln x with the 0·ln 0 ≡ 0 convention.
inline double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }
}  // namespace detail

// Shannon information of the file in nats.  The Stirling form is the
// thermodynamic-limit expression and over-counts at small Λ; the exact
// form is ln of the binomial coefficient via log-gamma.  Both are
// symmetric under L ↔ Λ−L.
inline InfoNats shannon_information(const BitFileStats& stats,
                                    InfoMethod method = InfoMethod::stirling) {
    const auto lambda = static_cast<double>(stats.length);
    const auto l = static_cast<double>(stats.ones);
    switch (method) {
        case InfoMethod::stirling:
            return InfoNats(std::max(0.0, detail::xlogx(lambda) - detail::xlogx(l) -
                                              detail::xlogx(lambda - l)));
        case InfoMethod::exact:
            return InfoNats(std::max(0.0, std::lgamma(lambda + 1.0) - std::lgamma(l + 1.0) -
                                              std::lgamma(lambda - l + 1.0)));
    }
    throw std::invalid_argument("shannon_information: unknown method");
}

// Signed Boltzmann H-function in k_B units: Λ·{p·ln p + (1−p)·ln(1−p)} ≤ 0.
inline double h_function(const BitFileStats& stats) {
    const double p = stats.fraction();
    return static_cast<double>(stats.length) * (detail::xlogx(p) + detail::xlogx(1.0 - p));
}

// Normalized information −H/S ∈ [0, 1], free of physical constants;
// equals 1 iff p = 1/2.
inline double normalized_information(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("normalized_information: fraction must lie in [0, 1]");
    return -(detail::xlogx(p) + detail::xlogx(1.0 - p)) / std::numbers::ln2;
}

// S ≥ K·I check.  A violation is a reported state, not an error.
inline ClausiusResult clausius_check(const EntropyBudget& budget) {
    const double bound_kb =
        static_cast<double>(budget.per_bit_multiplier) * budget.information.value;
    const double margin = budget.entropy_kb - bound_kb;
    return ClausiusResult{margin >= 0.0, margin};
}

// Two-level equilibrium fraction: p/(1−p) = e^(−Φ)  ⇒  p = 1/(1 + e^Φ).
// Evaluated as e^(−Φ)/(1 + e^(−Φ)) so large Φ cannot overflow.
inline double canonic_fraction(PhiRatio phi) {
    const double w = std::exp(-phi.value());
    return w / (1.0 + w);
}

// Count Λ, L, p over an ASCII '0'/'1' stream; whitespace is ignored,
// anything else is a parse error.  Empty input is a domain error.
BitFileStats bit_stats_from_text(std::string_view text);

// Count over raw bytes, unpacking each byte MSB-first (Λ = 8·#bytes).
BitFileStats bit_stats_from_bytes(std::span<const unsigned char> bytes);

}  // namespace emodes::info
