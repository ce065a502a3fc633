#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "emodes/info.hpp"
#include "oracles.hpp"

using namespace emodes;
using namespace emodes::info;

TEST_CASE("shannon_information: random files carry Lambda ln 2 nats") {
    for (std::uint64_t l : {1ull, 4ull, 50ull, 1000ull}) {
        const BitFileStats stats(2 * l, l);
        const double expected = static_cast<double>(2 * l) * std::numbers::ln2;
        CHECK(shannon_information(stats, InfoMethod::stirling).value ==
              doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("shannon_information: Stirling overshoots at desk scale") {
    const BitFileStats stats(4, 1);
    CHECK(shannon_information(stats, InfoMethod::stirling).value ==
          doctest::Approx(2.2493405784752334).epsilon(1e-13));
    // ln C(4,1) = ln 4
    CHECK(shannon_information(stats, InfoMethod::exact).value ==
          doctest::Approx(1.3862943611198906).epsilon(1e-13));
}

TEST_CASE("shannon_information: degenerate files carry nothing") {
    for (auto method : {InfoMethod::stirling, InfoMethod::exact}) {
        CHECK(shannon_information(BitFileStats(8, 0), method).value == 0.0);
        CHECK(shannon_information(BitFileStats(8, 8), method).value == 0.0);
    }
}

TEST_CASE("shannon_information: symmetric under L <-> Lambda-L") {
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::uint64_t lambda = 2 + gen() % 10000;
        const std::uint64_t l = gen() % (lambda + 1);
        for (auto method : {InfoMethod::stirling, InfoMethod::exact}) {
            const double a = shannon_information(BitFileStats(lambda, l), method).value;
            const double b = shannon_information(BitFileStats(lambda, lambda - l), method).value;
            CHECK(a == doctest::Approx(b).epsilon(1e-12));
        }
    }
}

TEST_CASE("shannon_information: maximum sits at the balanced file") {
    for (std::uint64_t lambda : {10ull, 11ull, 64ull}) {
        double best = -1.0;
        std::uint64_t best_l = 0;
        for (std::uint64_t l = 0; l <= lambda; ++l) {
            const double i = shannon_information(BitFileStats(lambda, l)).value;
            if (i > best) {
                best = i;
                best_l = l;
            }
        }
        // odd Lambda peaks at both middle values (L <-> Lambda-L symmetry)
        CHECK((best_l == lambda / 2 || best_l == (lambda + 1) / 2));
        CHECK(shannon_information(BitFileStats(lambda, lambda / 2)).value ==
              doctest::Approx(shannon_information(BitFileStats(lambda, (lambda + 1) / 2)).value)
                  .epsilon(1e-12));
        if (lambda % 2 == 0)
            CHECK(best == doctest::Approx(static_cast<double>(lambda) * std::numbers::ln2)
                              .epsilon(1e-12));
    }
}

TEST_CASE("shannon_information: Stirling dominates the exact count, gap vanishes per mode") {
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 50; ++trial) {
        const std::uint64_t lambda = 2 + gen() % 100000;
        const std::uint64_t l = 1 + gen() % (lambda - 1);
        const BitFileStats stats(lambda, l);
        CHECK(shannon_information(stats, InfoMethod::stirling).value >=
              shannon_information(stats, InfoMethod::exact).value);
    }

    double previous_gap = std::numeric_limits<double>::infinity();
    for (std::uint64_t lambda : {100ull, 10000ull, 1000000ull}) {
        const std::uint64_t l = static_cast<std::uint64_t>(0.3 * static_cast<double>(lambda));
        const BitFileStats stats(lambda, l);
        const double gap = (shannon_information(stats, InfoMethod::stirling).value -
                            shannon_information(stats, InfoMethod::exact).value) /
                           static_cast<double>(lambda);
        CHECK(gap > 0.0);
        CHECK(gap < previous_gap);
        previous_gap = gap;
    }
}

TEST_CASE("BitFileStats validates invariants") {
    CHECK_THROWS_AS(BitFileStats(0, 0), std::domain_error);
    CHECK_THROWS_AS(BitFileStats(4, 5), std::domain_error);
    CHECK(BitFileStats(4, 1).fraction() == 0.25);
}

TEST_CASE("h_function: signed mixing entropy") {
    // equilibrium p = 1/2 is the minimum: H = -Lambda ln 2
    CHECK(h_function(BitFileStats(64, 32)) ==
          doctest::Approx(-64.0 * std::numbers::ln2).epsilon(1e-13));
    // degenerate files
    CHECK(h_function(BitFileStats(8, 0)) == 0.0);
    CHECK(h_function(BitFileStats(8, 8)) == 0.0);
    // p = 1/4, Lambda = 4
    CHECK(h_function(BitFileStats(4, 1)) == doctest::Approx(-2.2493405784752334).epsilon(1e-13));
}

TEST_CASE("identity: -H equals the Stirling information to 1e-12") {
    const std::uint64_t lambda = 1000;
    for (std::uint64_t l = 100; l <= 900; l += 100) {
        const BitFileStats stats(lambda, l);
        const double i = shannon_information(stats, InfoMethod::stirling).value;
        CHECK(std::abs(-h_function(stats) - i) / i < 1e-12);
    }
}

TEST_CASE("normalized_information: constant-free Clausius ratio") {
    CHECK(normalized_information(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(normalized_information(0.0) == 0.0);
    CHECK(normalized_information(1.0) == 0.0);
    CHECK(normalized_information(0.25) ==
          doctest::Approx(0.81127812445913286).epsilon(1e-13));
    CHECK_THROWS_AS(normalized_information(-0.1), std::domain_error);
    CHECK_THROWS_AS(normalized_information(1.1), std::domain_error);
}

TEST_CASE("normalized_information: symmetric, strictly increasing up to 1/2, bounded") {
    for (double p = 0.05; p < 0.5; p += 0.05)
        CHECK(normalized_information(p) ==
              doctest::Approx(normalized_information(1.0 - p)).epsilon(1e-13));
    double previous = -1.0;
    for (double p = 0.01; p <= 0.5; p += 0.01) {
        const double v = normalized_information(p);
        CHECK(v > previous);
        CHECK(v <= 1.0);
        previous = v;
    }
}

TEST_CASE("clausius_check: S >= K I with margins") {
    // Lambda classical modes against a random file of the same length
    const double lambda = 100.0;
    const auto equilibrium = clausius_check(
        EntropyBudget(lambda, 1, InfoNats(lambda * std::numbers::ln2)));
    CHECK(equilibrium.holds);
    CHECK(equilibrium.margin_kb ==
          doctest::Approx(lambda * (1.0 - std::numbers::ln2)).epsilon(1e-13));

    const auto violated = clausius_check(EntropyBudget(0.5, 1, InfoNats(1.0)));
    CHECK_FALSE(violated.holds);
    CHECK(violated.margin_kb == doctest::Approx(-0.5).epsilon(1e-15));

    const auto boundary = clausius_check(EntropyBudget(3.0, 3, InfoNats(1.0)));
    CHECK(boundary.holds);
    CHECK(std::abs(boundary.margin_kb) < 1e-15);

    CHECK_THROWS_AS(EntropyBudget(1.0, 0, InfoNats(1.0)), std::domain_error);
    CHECK_THROWS_AS(InfoNats(-1.0), std::domain_error);
}

TEST_CASE("canonic_fraction: two-level equilibrium") {
    // degenerate levels: p -> 1/2
    CHECK(canonic_fraction(PhiRatio(1e-12)) == doctest::Approx(0.5).epsilon(1e-9));
    // p/(1-p) = 1/3 solved exactly
    CHECK(canonic_fraction(PhiRatio(std::log(3.0))) == doctest::Approx(0.25).epsilon(1e-12));
    // consistency with the canonic occupancy at small p
    const double p10 = canonic_fraction(PhiRatio(10.0));
    CHECK(p10 == doctest::Approx(4.5397868702434395e-5).epsilon(1e-12));
    CHECK(std::abs(p10 - canonic_occupancy(PhiRatio(10.0))) / p10 < 1e-4);
    // no overflow for huge phi
    CHECK(canonic_fraction(PhiRatio(1e4)) >= 0.0);
}

TEST_CASE("canonic_fraction matches brute-force free-energy minimization") {
    for (double phi : {0.1, 1.0, std::log(3.0), 5.0}) {
        const double oracle = oracles::free_energy_argmin(phi);
        CHECK(std::abs(canonic_fraction(PhiRatio(phi)) - oracle) < 1e-6);
    }
}

TEST_CASE("bit_stats_from_text: counting and validation") {
    const auto stats = bit_stats_from_text("0101");
    CHECK(stats.length == 4);
    CHECK(stats.ones == 2);
    CHECK(stats.fraction() == 0.5);

    const auto sparse = bit_stats_from_text("0001");
    CHECK(sparse.length == 4);
    CHECK(sparse.ones == 1);
    CHECK(sparse.fraction() == 0.25);

    const auto zeros = bit_stats_from_text("00000000");
    CHECK(zeros.length == 8);
    CHECK(zeros.ones == 0);
    CHECK(zeros.fraction() == 0.0);

    const auto spaced = bit_stats_from_text(" 01\n0 1\t");
    CHECK(spaced.length == 4);
    CHECK(spaced.ones == 2);

    CHECK_THROWS_AS(bit_stats_from_text(""), std::domain_error);
    CHECK_THROWS_AS(bit_stats_from_text("  \n "), std::domain_error);
    CHECK_THROWS_AS(bit_stats_from_text("0121"), std::runtime_error);
}

TEST_CASE("bit_stats_from_bytes: MSB-first unpacking") {
    const unsigned char all_ones[] = {0xFF};
    CHECK(bit_stats_from_bytes(all_ones).ones == 8);
    const unsigned char pattern[] = {0xB0};  // 1011 0000
    const auto stats = bit_stats_from_bytes(pattern);
    CHECK(stats.length == 8);
    CHECK(stats.ones == 3);
    CHECK_THROWS_AS(bit_stats_from_bytes({}), std::domain_error);
}
