#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "emodes/carnot.hpp"
#include "emodes/info.hpp"
#include "emodes/modes.hpp"

using namespace emodes;
namespace ct = emodes::carnot;

TEST_CASE("hook_energy: half kappa A squared") {
    CHECK(ct::hook_energy({2.0, 1.0}) == 1.0);
    CHECK(ct::hook_energy({2.0, 2.0}) == 4.0);
    CHECK(ct::hook_energy({2.0, 0.0}) == 0.0);
    CHECK_THROWS_AS(ct::HookOscillator(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(ct::HookOscillator(-2.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(ct::HookOscillator(2.0, -1.0), std::domain_error);
}

TEST_CASE("hook_energy: homogeneous in amplitude^2 and kappa") {
    std::mt19937_64 gen(19);
    for (int trial = 0; trial < 100; ++trial) {
        const double kappa = 1e-3 + static_cast<double>(gen() % 1000);
        const double amp = 1e-3 + static_cast<double>(gen() % 100);
        const double s = 0.5 + static_cast<double>(gen() % 7);
        const double base = ct::hook_energy({kappa, amp});
        CHECK(ct::hook_energy({kappa, s * amp}) == doctest::Approx(s * s * base).epsilon(1e-12));
        CHECK(ct::hook_energy({s * kappa, amp}) == doctest::Approx(s * base).epsilon(1e-12));
    }
}

TEST_CASE("oscillator_temperature: E / k_B") {
    const PhysicalConstants consts;
    CHECK(ct::oscillator_temperature(consts.k_B * 300.0) ==
          doctest::Approx(300.0).epsilon(1e-12));
    // one joule in a single mode is far beyond any blackbody
    CHECK(ct::oscillator_temperature(1.0) ==
          doctest::Approx(7.2429705160399204e22).epsilon(1e-12));
    CHECK(ct::oscillator_temperature(0.0) == 0.0);
    CHECK_THROWS_AS(ct::oscillator_temperature(-1.0), std::domain_error);

    // laser mode: 1e16 photons at 0.7 um
    const double energy = 1e16 * consts.h * consts.c / 0.7e-6;
    const double t = ct::oscillator_temperature(energy);
    CHECK(t == doctest::Approx(2.0553955392913340e20).epsilon(1e-9));
    CHECK(t > 1e20 / 3.0);
    CHECK(t < 1e20 * 3.0);
}

TEST_CASE("carnot_efficiency: bounds and values") {
    CHECK(ct::carnot_efficiency(300.0, 300.0) == 0.0);
    CHECK(ct::carnot_efficiency(1.0, 4.0) == 0.75);
    // T_L/T_H = 1e-18 is below double resolution around 1: the laser-mode
    // amplification efficiency rounds to exactly 1
    CHECK(ct::carnot_efficiency(300.0, 3e20) == doctest::Approx(1.0).epsilon(1e-15));
    const double near_ideal = ct::carnot_efficiency(300.0, 3e10);
    CHECK(near_ideal == doctest::Approx(1.0 - 1e-8).epsilon(1e-12));
    CHECK(near_ideal < 1.0);

    CHECK_THROWS_AS(ct::carnot_efficiency(400.0, 300.0), std::domain_error);
    CHECK_THROWS_AS(ct::carnot_efficiency(0.0, 300.0), std::domain_error);
    CHECK_THROWS_AS(ct::carnot_efficiency(-1.0, 300.0), std::domain_error);
}

TEST_CASE("carnot_efficiency: monotone in both temperatures") {
    std::mt19937_64 gen(37);
    for (int trial = 0; trial < 200; ++trial) {
        const double t_low = 1.0 + static_cast<double>(gen() % 1000);
        const double t_high = t_low + static_cast<double>(gen() % 1000);
        const double base = ct::carnot_efficiency(t_low, t_high);
        CHECK(ct::carnot_efficiency(t_low, t_high * 1.5) >= base);
        CHECK(ct::carnot_efficiency(t_low * 0.5, t_high) >= base);
    }
}

TEST_CASE("min_work: resonant amplification energy") {
    CHECK(ct::min_work(1.0, 4.0) == 3.0);
    CHECK(ct::min_work(2.5, 2.5) == 0.0);
    CHECK(ct::min_work(0.0, 1.0) == 1.0);
    CHECK_THROWS_AS(ct::min_work(4.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(ct::min_work(-1.0, 1.0), std::domain_error);
}

TEST_CASE("identity: min_work / E_H equals the Carnot efficiency of T = E/k_B") {
    const PhysicalConstants consts;
    // the 1:4 case is exact in binary arithmetic
    CHECK(ct::min_work(1.0, 4.0) / 4.0 ==
          ct::carnot_efficiency(ct::oscillator_temperature(1.0),
                                ct::oscillator_temperature(4.0)));

    std::mt19937_64 gen(41);
    for (int trial = 0; trial < 1000; ++trial) {
        const double u1 = static_cast<double>(gen()) * 0x1.0p-64;
        const double u2 = static_cast<double>(gen()) * 0x1.0p-64;
        const double e_low = 1e-6 + 10.0 * u1;
        const double e_high = e_low * (1.0 + 100.0 * u2);
        const double via_work = ct::min_work(e_low, e_high) / e_high;
        const double via_temperature = ct::carnot_efficiency(
            e_low / consts.k_B, e_high / consts.k_B);
        CHECK(std::abs(via_work - via_temperature) <= 1e-12);
    }
}

TEST_CASE("relaxation: a lone oscillator keeps 1 k_B; a canonic bath gains entropy") {
    // removing energy from a single harmonic mode does not change its entropy
    CHECK(mode_entropy(1e6, Regime::classical) == mode_entropy(1e3, Regime::classical));

    // dumping that energy into a quantum bath of 1e6 modes raises the total:
    // occupancies tick up as phi drops from 10 to 10 - delta
    const std::size_t bath_size = 1000000;
    const double n_before = occupancy(PhiRatio(10.0));
    const double n_after = occupancy(PhiRatio(10.0 - 0.01));
    std::vector<Mode> before(bath_size, Mode(1e12, n_before));
    std::vector<Mode> after(bath_size, Mode(1e12, n_after));
    const double s_before = ensemble_entropy(ModeEnsemble(before), Regime::quantum);
    const double s_after = ensemble_entropy(ModeEnsemble(after), Regime::quantum);
    CHECK(s_after > s_before);
}

TEST_CASE("table1_summary: high-occupation column at small phi") {
    const PhysicalConstants consts;
    const double freq = 1e12;
    const auto [high, canonic] = ct::table1_summary(PhiRatio(0.001), freq);

    CHECK(high.applicable);
    CHECK_FALSE(canonic.applicable);
    const double n = occupancy(PhiRatio(0.001));
    CHECK(n == doctest::Approx(999.50008333333194).epsilon(1e-12));
    CHECK(high.temperature_kelvin ==
          doctest::Approx(n * consts.h * freq / consts.k_B).epsilon(1e-12));
    CHECK(high.equilibrium_fraction == 0.5);
    CHECK(high.avg_mode_entropy_kb == doctest::Approx(std::numbers::ln2).epsilon(1e-15));
    CHECK(high.distribution == "power-law");
    CHECK(high.carnot_role == "amplifier");
}

TEST_CASE("table1_summary: canonic column at large phi") {
    const PhysicalConstants consts;
    const double freq = 1e12;
    const auto [high, canonic] = ct::table1_summary(PhiRatio(12.0), freq);

    CHECK_FALSE(high.applicable);
    CHECK(canonic.applicable);
    const double n = occupancy(PhiRatio(12.0));
    CHECK(n == doctest::Approx(6.1442501049056063e-6).epsilon(1e-12));
    CHECK(canonic.temperature_kelvin ==
          doctest::Approx(-consts.h * freq / (consts.k_B * std::log(n))).epsilon(1e-12));
    CHECK(canonic.temperature_kelvin > 0.0);
    CHECK(canonic.equilibrium_fraction ==
          doctest::Approx(info::canonic_fraction(PhiRatio(12.0))).epsilon(1e-15));
    CHECK(canonic.avg_mode_entropy_kb ==
          doctest::Approx(12.0 * std::exp(-12.0)).epsilon(1e-13));
    CHECK(canonic.distribution == "exponential");
    CHECK(canonic.carnot_role == "heat engine");
}

TEST_CASE("table1_summary: neither limit applies at phi = ln 2") {
    const auto [high, canonic] = ct::table1_summary(PhiRatio(std::numbers::ln2), 1e12);
    CHECK_FALSE(high.applicable);
    CHECK_FALSE(canonic.applicable);
    CHECK_THROWS_AS(ct::table1_summary(PhiRatio(1.0), 0.0), std::domain_error);
}
