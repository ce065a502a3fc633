#include "emodes/benford.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace emodes::benford {

namespace {

constexpr double kSumTolerance = 1e-12;
constexpr double kLogGuardBand = 1e-12;

// Scans a decimal literal (sign, mantissa digits with at most one '.',
// optional e/E exponent) and returns the first digit in 1..9, or nullopt
// when every mantissa digit is zero.  Throws on malformed tokens.
std::optional<int> scan_decimal(std::string_view token) {
    std::size_t i = 0;
    const std::size_t n = token.size();
    if (i < n && (token[i] == '+' || token[i] == '-')) ++i;

    int leading = 0;
    std::size_t mantissa_digits = 0;
    bool seen_point = false;
    for (; i < n; ++i) {
        const char ch = token[i];
        if (ch >= '0' && ch <= '9') {
            ++mantissa_digits;
            if (leading == 0 && ch != '0') leading = ch - '0';
        } else if (ch == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (mantissa_digits == 0)
        throw std::runtime_error("first_digit: not a decimal number: '" + std::string(token) +
                                 "'");
    if (i < n) {
        if (token[i] != 'e' && token[i] != 'E')
            throw std::runtime_error("first_digit: trailing garbage in '" + std::string(token) +
                                     "'");
        ++i;
        if (i < n && (token[i] == '+' || token[i] == '-')) ++i;
        std::size_t exp_digits = 0;
        for (; i < n && token[i] >= '0' && token[i] <= '9'; ++i) ++exp_digits;
        if (exp_digits == 0 || i != n)
            throw std::runtime_error("first_digit: malformed exponent in '" + std::string(token) +
                                     "'");
    }
    if (leading == 0) return std::nullopt;  // the value is zero
    return leading;
}

bool is_nonfinite_token(std::string_view token) {
    std::string lower;
    lower.reserve(token.size());
    for (char ch : token) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    return lower == "nan" || lower == "inf" || lower == "-inf" || lower == "+inf" ||
           lower == "infinity" || lower == "-infinity";
}

}  // namespace

DigitDistribution::DigitDistribution(int b, std::vector<double> p) : base(b), probs(std::move(p)) {
    if (base < 2) throw std::domain_error("DigitDistribution: base must be >= 2");
    if (probs.size() != static_cast<std::size_t>(base - 1))
        throw std::invalid_argument("DigitDistribution: need exactly base-1 probabilities");
    double sum = 0.0;
    for (std::size_t d = 0; d < probs.size(); ++d) {
        if (!(probs[d] > 0.0 && probs[d] <= 1.0))
            throw std::domain_error("DigitDistribution: probabilities must lie in (0, 1]");
        if (d > 0 && !(probs[d] < probs[d - 1]))
            throw std::domain_error("DigitDistribution: probabilities must decrease with digit");
        sum += probs[d];
    }
    if (std::abs(sum - 1.0) > kSumTolerance)
        throw std::domain_error("DigitDistribution: probabilities must sum to 1");
}

DigitHistogram::DigitHistogram(int b) : base(b) {
    if (b < 2) throw std::domain_error("DigitHistogram: base must be >= 2");
    counts.assign(static_cast<std::size_t>(b - 1), 0);
}

void DigitHistogram::add_digit(int digit) {
    if (digit < 1 || digit > base - 1)
        throw std::domain_error("DigitHistogram: digit out of range for base");
    ++counts[static_cast<std::size_t>(digit - 1)];
    ++total;
}

void DigitHistogram::add_value(double x) {
    if (!std::isfinite(x) || x == 0.0) {
        ++skipped;
        return;
    }
    add_digit(*first_digit(x, base));
}

void DigitHistogram::add_decimal(std::string_view token) {
    if (is_nonfinite_token(token)) {
        ++skipped;
        return;
    }
    if (base == 10) {
        const auto digit = scan_decimal(token);
        if (!digit) {
            ++skipped;
            return;
        }
        add_digit(*digit);
        return;
    }
    // Other bases need the numeric value; literals beyond double range
    // come back non-finite and are skipped.
    std::string buf(token);
    char* end = nullptr;
    const double x = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || buf.empty())
        throw std::runtime_error("add_decimal: not a number: '" + buf + "'");
    add_value(x);
}

void DigitHistogram::merge(const DigitHistogram& other) {
    if (other.base != base)
        throw std::invalid_argument("DigitHistogram::merge: base mismatch");
    for (std::size_t d = 0; d < counts.size(); ++d) counts[d] += other.counts[d];
    total += other.total;
    skipped += other.skipped;
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::close: return "close";
        case Verdict::acceptable: return "acceptable";
        case Verdict::nonconforming: return "nonconforming";
    }
    return "unknown";
}

double digit_density(int digit, int base) {
    if (base < 2) throw std::domain_error("digit_density: base must be >= 2");
    if (digit < 1 || digit > base - 1)
        throw std::domain_error("digit_density: digit must lie in [1, base-1]");
    return std::log1p(1.0 / static_cast<double>(digit));
}

DigitDistribution pmf(int base) {
    if (base < 2) throw std::domain_error("pmf: base must be >= 2");
    const double log_base = std::log(static_cast<double>(base));
    std::vector<double> probs(static_cast<std::size_t>(base - 1));
    for (int d = 1; d <= base - 1; ++d)
        probs[static_cast<std::size_t>(d - 1)] = digit_density(d, base) / log_base;
    return DigitDistribution(base, std::move(probs));
}

DigitDistribution equilibrium_distribution(std::span<const PhiRatio> digit_mode_phis) {
    if (digit_mode_phis.empty())
        throw std::invalid_argument("equilibrium_distribution: need at least one digit-mode");
    double sum = 0.0;
    for (const PhiRatio& phi : digit_mode_phis) sum += phi.value();
    std::vector<double> probs;
    probs.reserve(digit_mode_phis.size());
    for (const PhiRatio& phi : digit_mode_phis) probs.push_back(phi.value() / sum);
    return DigitDistribution(static_cast<int>(digit_mode_phis.size()) + 1, std::move(probs));
}

std::optional<int> first_digit(std::string_view decimal_literal) {
    return scan_decimal(decimal_literal);
}

std::optional<int> first_digit(double x, int base) {
    if (base < 2) throw std::domain_error("first_digit: base must be >= 2");
    if (!std::isfinite(x)) throw std::domain_error("first_digit: non-finite value");
    if (x == 0.0) return std::nullopt;
    const double ax = std::abs(x);

    if (base == 10) {
        // Render through the shortest-exact-enough decimal form so that
        // values sitting on decade edges (1000, 1e-3, ...) classify by
        // their decimal meaning rather than by log rounding.
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17e", ax);
        return scan_decimal(buf);
    }

    // Normalize into [1, b) by repeated exact-progress scaling; bounded by
    // ~1100 iterations even for subnormals, with no pow under/overflow.
    const double b = static_cast<double>(base);
    double mantissa = ax;
    while (mantissa >= b) mantissa /= b;
    while (mantissa < 1.0) mantissa *= b;
    // values a hair under a power of the base classify as that power
    if (b - mantissa < b * kLogGuardBand) return 1;
    return static_cast<int>(mantissa);
}

ConformanceReport conformance(const DigitHistogram& hist, const DigitDistribution& ref,
                              const Thresholds& thresholds) {
    if (hist.base != ref.base)
        throw std::invalid_argument("conformance: histogram and reference base mismatch");
    if (hist.total == 0) throw std::domain_error("conformance: empty histogram");
    if (!(thresholds.close > 0.0 && thresholds.close <= thresholds.acceptable))
        throw std::domain_error("conformance: need 0 < close <= acceptable");

    const double total = static_cast<double>(hist.total);
    double chi2 = 0.0;
    double abs_dev = 0.0;
    for (std::size_t d = 0; d < ref.probs.size(); ++d) {
        const double expected = total * ref.probs[d];
        const double observed = static_cast<double>(hist.counts[d]);
        const double diff = observed - expected;
        chi2 += diff * diff / expected;
        abs_dev += std::abs(observed / total - ref.probs[d]);
    }
    const double mad = abs_dev / static_cast<double>(ref.probs.size());
    Verdict verdict = Verdict::nonconforming;
    if (mad < thresholds.close)
        verdict = Verdict::close;
    else if (mad < thresholds.acceptable)
        verdict = Verdict::acceptable;
    return ConformanceReport{chi2, ref.base - 2, mad, verdict};
}

}  // namespace emodes::benford
