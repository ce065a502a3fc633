#pragma once

/*
 * benford.hpp — the first-significant-digit distribution as an
 * equilibrium property, plus empirical conformance scoring.
 *
 * A set of digit-modes in which the mode for digit d holds d quanta has
 * per-digit weight ρ(d) ∝ ln(1 + 1/d) (the equal-temperature condition
 * Φ(n) = ln(1 + 1/n) at n = d, up to an arbitrary common Φ scale).  The
 * scale cancels in normalization, and since Σ_{d=1}^{b−1} ln(1 + 1/d)
 * telescopes to ln b, the equilibrium distribution is
 *
 *     φ(d) = log_b(1 + 1/d),    d = 1 … b−1,
 *
 * i.e. Benford's law (base 10: φ(1) ≈ 0.30103 … φ(9) ≈ 0.04576).
 *
 * Conformance of an empirical digit histogram is scored with Pearson χ²
 * (dof = b−2) and the mean absolute deviation of digit frequencies
 * (MAD), with the usual forensic-audit verdict thresholds for base 10:
 * close < 0.006, acceptable < 0.012, nonconforming otherwise.
 *
 * Base-10 digit extraction is decimal-string based, so arbitrarily large
 * exact integers (beyond double range) are handled without
 * representability edge cases; other bases use a log-based path with a
 * guard band.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "emodes/modes.hpp"

namespace emodes::benford {

// Probabilities of the first significant digits 1..b−1.
struct DigitDistribution {
    int base;
    std::vector<double> probs;  // probs[d−1] is the probability of digit d

    DigitDistribution(int b, std::vector<double> p);
};

// Empirical counts of first significant digits 1..b−1.  Inputs with no
// significant digit (zeros, non-finite values, empty cells) are counted
// in `skipped`, never as errors.  Merging adds counts, so shards can be
// accumulated in any order.
struct DigitHistogram {
    int base;
    std::vector<std::uint64_t> counts;  // counts[d−1] observes digit d
    std::uint64_t total = 0;
    std::uint64_t skipped = 0;

    explicit DigitHistogram(int b);

    void add_digit(int digit);
    // Any finite nonzero value; zero and non-finite increment `skipped`.
    void add_value(double x);
    // A decimal literal such as "-9120", "0.00345", "2.5e7" or an exact
    // integer of any length.  Base 10 extracts straight from the string;
    // other bases parse to double first.  Malformed tokens throw.
    void add_decimal(std::string_view token);
    void merge(const DigitHistogram& other);
};

enum class Verdict { close, acceptable, nonconforming };

std::string_view to_string(Verdict v);

// MAD verdict cutoffs; close < first, acceptable < second.
struct Thresholds {
    double close = 0.006;
    double acceptable = 0.012;
};

struct ConformanceReport {
    double chi2;
    int dof;  // b − 2
    double mad;
    Verdict verdict;
};

// ρ(d) = ln(1 + 1/d) for a digit d in [1, b−1].
double digit_density(int digit, int base = 10);

// φ(d) = log_b(1 + 1/d) for d = 1..b−1; telescopes to total mass 1.
DigitDistribution pmf(int base = 10);

// Normalize per-digit-mode Φ values (digit d's mode holding d quanta has
// Φ(d) = ln(1 + 1/d), times any arbitrary positive scale) into the
// equilibrium digit distribution.  The scale cancels: the result for the
// digit-mode construction is pmf(b) regardless of it.
DigitDistribution equilibrium_distribution(std::span<const PhiRatio> digit_mode_phis);

// First significant digit of a decimal literal; nullopt when the value
// is zero.  Throws on malformed input.
std::optional<int> first_digit(std::string_view decimal_literal);

// First significant digit of |x| in the given base; nullopt for x = 0.
// Non-finite x is a domain error (dataset-level skipping is the
// histogram's job).
std::optional<int> first_digit(double x, int base = 10);

// Pearson χ² and MAD of an observed histogram against a reference
// distribution, with a MAD-based verdict.
ConformanceReport conformance(const DigitHistogram& hist, const DigitDistribution& ref,
                              const Thresholds& thresholds = {});

}  // namespace emodes::benford
