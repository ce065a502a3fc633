// entropy-modes: mode statistics, file entropy, Benford conformance,
// power-law curves, quanta-exchange simulation and Carnot relations,
// reported as reproducible JSON.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "emodes/benford.hpp"
#include "emodes/carnot.hpp"
#include "emodes/constants.hpp"
#include "emodes/info.hpp"
#include "emodes/modes.hpp"
#include "emodes/powerlaw.hpp"
#include "emodes/sim.hpp"
#include "emodes/version.hpp"

#include "dataset.hpp"
#include "digest.hpp"
#include "report.hpp"

namespace {

using json = nlohmann::json;
using namespace emodes;
using cli::UsageError;

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(); }

std::string format_scientific(double v) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific);
    return std::string(buf, result.ptr);
}

std::string format_fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::pair<double, double> parse_pair(const std::string& text, const char* what) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw UsageError(std::string(what) + ": expected 'lo,hi', got '" + text + "'");
    try {
        const double lo = std::stod(text.substr(0, comma));
        const double hi = std::stod(text.substr(comma + 1));
        return {lo, hi};
    } catch (const std::exception&) {
        throw UsageError(std::string(what) + ": cannot parse '" + text + "'");
    }
}

std::uint64_t seed_or_env(const CLI::Option* seed_option, std::uint64_t seed_flag) {
    if (seed_option->count() > 0) return seed_flag;
    if (const char* env = std::getenv("ENTROPY_MODES_SEED")) {
        std::uint64_t value = 0;
        const std::string text(env);
        const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
        if (result.ec != std::errc() || result.ptr != text.data() + text.size())
            throw UsageError("ENTROPY_MODES_SEED is not an unsigned integer: '" + text + "'");
        return value;
    }
    return 0;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

// ---------------------------------------------------------------- modes --

struct ModesArgs {
    double phi = 0.0;
    double n = 0.0;
    double freq_hz = 0.0;
    double temp_k = 0.0;
    std::string regime = "auto";
    CLI::Option *phi_opt = nullptr, *n_opt = nullptr, *freq_opt = nullptr, *temp_opt = nullptr;
};

json run_modes(const ModesArgs& args) {
    const bool has_phi = args.phi_opt->count() > 0;
    const bool has_n = args.n_opt->count() > 0;
    const bool has_freq = args.freq_opt->count() > 0;
    const bool has_temp = args.temp_opt->count() > 0;

    const int ways = (has_phi ? 1 : 0) + (has_n ? 1 : 0) + (has_temp ? 1 : 0);
    if (ways != 1)
        throw UsageError("give exactly one of --phi, --n, or --freq-hz with --temp-k");
    if (has_temp && !has_freq) throw UsageError("--temp-k needs --freq-hz");

    const PhysicalConstants consts;
    std::optional<PhiRatio> phi;
    if (has_phi) {
        phi = PhiRatio(args.phi);
    } else if (has_n) {
        phi = phi_of_occupancy(args.n);
    } else {
        if (args.temp_k <= 0.0 || !std::isfinite(args.temp_k))
            throw std::domain_error("temperature must be finite and positive");
        if (args.freq_hz <= 0.0 || !std::isfinite(args.freq_hz))
            throw std::domain_error("frequency must be finite and positive");
        phi = PhiRatio(consts.h * args.freq_hz / (consts.k_B * args.temp_k));
    }

    const double n = occupancy(*phi);
    Regime regime;
    std::vector<std::string> warnings;
    if (args.regime == "auto") {
        regime = select_regime(n);
    } else if (args.regime == "quantum") {
        regime = Regime::quantum;
        if (n > 0.01)
            warnings.push_back("quantum (canonic) form applied outside its regime (n > 0.01)");
    } else if (args.regime == "classical") {
        regime = Regime::classical;
        if (n < 100.0)
            warnings.push_back(
                "classical (high-occupation) form applied outside its regime (n < 100)");
    } else if (args.regime == "exact") {
        regime = Regime::exact;
    } else {
        throw UsageError("--regime must be auto, quantum, classical or exact");
    }

    const double entropy_kb = mode_entropy(n, regime);
    json results;
    results["phi"] = phi->value();
    results["occupancy"] = n;
    results["canonic_occupancy"] = canonic_occupancy(*phi);
    results["regime"] = regime == Regime::quantum     ? "quantum"
                        : regime == Regime::classical ? "classical"
                                                      : "exact";
    results["entropy_per_mode_kb"] = entropy_kb;
    results["entropy_per_mode_j_per_k"] = entropy_kb * consts.k_B;
    results["temperature_k"] =
        has_freq ? json(mode_temperature(n, args.freq_hz, consts)) : json();
    results["warnings"] = warnings;

    json params;
    if (has_phi) params["phi"] = args.phi;
    if (has_n) params["n"] = args.n;
    if (has_freq) params["freq_hz"] = args.freq_hz;
    if (has_temp) params["temp_k"] = args.temp_k;
    params["regime"] = args.regime;
    return cli::make_report("modes", params, std::nullopt, results);
}

// -------------------------------------------------------------- entropy --

struct EntropyArgs {
    std::string file;
    bool raw = false;
    std::uint64_t lambda = 0;
    std::uint64_t ones = 0;
    std::string method = "stirling";
    std::string units = "nats";
    int m = 1;
    CLI::Option *file_opt = nullptr, *lambda_opt = nullptr, *ones_opt = nullptr;
};

json run_entropy(const EntropyArgs& args) {
    const bool has_file = args.file_opt->count() > 0;
    const bool has_counts = args.lambda_opt->count() > 0 || args.ones_opt->count() > 0;
    if (has_file == has_counts)
        throw UsageError("give either --file or the --lambda/--ones pair");
    if (has_counts && (args.lambda_opt->count() == 0 || args.ones_opt->count() == 0))
        throw UsageError("--lambda and --ones go together");
    if (args.raw && !has_file) throw UsageError("--raw only applies to --file input");
    if (args.method != "stirling" && args.method != "exact")
        throw UsageError("--method must be stirling or exact");
    if (args.units != "nats" && args.units != "bits")
        throw UsageError("--units must be nats or bits");
    if (args.m < 1) throw UsageError("--m must be a positive integer");

    std::optional<std::string> digest;
    std::optional<info::BitFileStats> stats;
    if (has_file) {
        const std::string bytes = cli::read_input(args.file);
        digest = cli::fnv1a64_digest(bytes);
        if (args.raw)
            stats = info::bit_stats_from_bytes(
                {reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size()});
        else
            stats = info::bit_stats_from_text(bytes);
    } else {
        stats = info::BitFileStats(args.lambda, args.ones);
    }

    const auto method =
        args.method == "exact" ? info::InfoMethod::exact : info::InfoMethod::stirling;
    const double nats = info::shannon_information(*stats, method).value;
    const double h_kb = info::h_function(*stats);
    const double in_units = args.units == "bits" ? nats / std::numbers::ln2 : nats;

    // budget: each of the Lambda modes carries m k_B (Eq. of the lone
    // oscillator scaled by the modes-per-bit multiplier)
    const double entropy_kb = static_cast<double>(args.m) * static_cast<double>(stats->length);
    const auto clausius = info::clausius_check(
        info::EntropyBudget(entropy_kb, args.m, info::InfoNats(nats)));

    json results;
    results["lambda"] = stats->length;
    results["ones"] = stats->ones;
    results["p"] = stats->fraction();
    results["method"] = args.method;
    results["units"] = args.units;
    results["information"] = in_units;
    results["information_nats"] = nats;
    results["h_function_kb"] = h_kb;
    results["information_content_kb"] = -h_kb;
    results["normalized_information"] = info::normalized_information(stats->fraction());
    results["clausius"] = {{"m", args.m},
                           {"entropy_kb", entropy_kb},
                           {"bound_kb", static_cast<double>(args.m) * nats},
                           {"holds", clausius.holds},
                           {"margin_kb", clausius.margin_kb}};

    json params;
    if (has_file) {
        params["file"] = args.file;
        params["raw"] = args.raw;
    } else {
        params["lambda"] = args.lambda;
        params["ones"] = args.ones;
    }
    params["method"] = args.method;
    params["units"] = args.units;
    params["m"] = args.m;
    return cli::make_report("entropy", params, digest, results);
}

// -------------------------------------------------------------- benford --

struct BenfordArgs {
    std::string file;
    std::string csv;
    std::string column;
    int base = 10;
    std::string emit_pmf;
    std::string thresholds;
    CLI::Option *file_opt = nullptr, *csv_opt = nullptr, *column_opt = nullptr,
                *emit_opt = nullptr, *thresholds_opt = nullptr;
};

std::string pmf_tsv(const benford::DigitDistribution& dist) {
    std::string tsv;
    for (std::size_t d = 0; d < dist.probs.size(); ++d)
        tsv += std::to_string(d + 1) + "\t" + format_fixed6(dist.probs[d]) + "\n";
    return tsv;
}

json run_benford(const BenfordArgs& args) {
    const bool has_file = args.file_opt->count() > 0;
    const bool has_csv = args.csv_opt->count() > 0;
    const bool has_pmf = args.emit_opt->count() > 0;
    if (has_file && has_csv) throw UsageError("--file and --csv are mutually exclusive");
    if (has_csv && args.column_opt->count() == 0) throw UsageError("--csv needs --column");
    if (!has_file && !has_csv && !has_pmf)
        throw UsageError("nothing to do: give --file, --csv or --emit-pmf");

    const auto reference = benford::pmf(args.base);

    benford::Thresholds thresholds;
    if (args.thresholds_opt->count() > 0) {
        const auto [close, acceptable] = parse_pair(args.thresholds, "--thresholds");
        thresholds = {close, acceptable};
    }

    json params;
    params["base"] = args.base;

    bool pmf_to_stdout = false;
    if (has_pmf) {
        params["emit_pmf"] = args.emit_pmf;
        if (args.emit_pmf == "-") {
            if (has_file || has_csv)
                throw UsageError("--emit-pmf - (stdout) cannot be combined with a dataset; "
                                 "use a file path");
            pmf_to_stdout = true;
        } else {
            write_text_file(args.emit_pmf, pmf_tsv(reference));
        }
    }

    json results;
    results["base"] = args.base;
    std::optional<std::string> digest;

    if (has_file || has_csv) {
        const std::string bytes = cli::read_input(has_file ? args.file : args.csv);
        digest = cli::fnv1a64_digest(bytes);

        benford::DigitHistogram hist(args.base);
        if (has_file) {
            for (const std::string& token : cli::split_tokens(bytes)) hist.add_decimal(token);
            params["file"] = args.file;
        } else {
            for (std::string cell : cli::csv_column(bytes, args.column)) {
                // trim surrounding blanks; empty cells are skipped
                const auto begin = cell.find_first_not_of(" \t");
                if (begin == std::string::npos) {
                    ++hist.skipped;
                    continue;
                }
                const auto end = cell.find_last_not_of(" \t");
                hist.add_decimal(cell.substr(begin, end - begin + 1));
            }
            params["csv"] = args.csv;
            params["column"] = args.column;
        }
        if (hist.total == 0)
            throw std::domain_error("dataset has no usable values (all skipped)");

        const auto report = benford::conformance(hist, reference, thresholds);
        json digits = json::array();
        for (std::size_t d = 0; d < hist.counts.size(); ++d)
            digits.push_back(
                {{"digit", d + 1},
                 {"observed", hist.counts[d]},
                 {"observed_freq",
                  static_cast<double>(hist.counts[d]) / static_cast<double>(hist.total)},
                 {"expected_freq", reference.probs[d]}});
        results["digits"] = digits;
        results["total"] = hist.total;
        results["skipped"] = hist.skipped;
        results["chi2"] = report.chi2;
        results["dof"] = report.dof;
        results["mad"] = report.mad;
        results["verdict"] = benford::to_string(report.verdict);
        results["thresholds"] = {{"close", thresholds.close},
                                 {"acceptable", thresholds.acceptable}};
    } else {
        results["pmf"] = reference.probs;
    }

    const json report = cli::make_report("benford", params, digest, results);
    if (pmf_to_stdout) {
        std::cout << pmf_tsv(reference);
        return json();  // TSV owns stdout; no JSON report
    }
    return report;
}

// ------------------------------------------------------------- powerlaw --

struct PowerlawArgs {
    double phi_lo = 0.0;
    double phi_hi = 0.0;
    std::size_t points = 200;
    bool linear = false;
    bool field = false;
    std::string fit_window;
    std::string out;
    CLI::Option *fit_opt = nullptr, *out_opt = nullptr;
};

json run_powerlaw(const PowerlawArgs& args) {
    if (!(args.phi_lo > 0.0) || !(args.phi_lo < args.phi_hi) || args.points < 2)
        throw UsageError("need 0 < --phi-lo < --phi-hi and --points >= 2");

    auto samples = powerlaw::curve(args.phi_lo, args.phi_hi, args.points,
                                   args.linear ? powerlaw::Spacing::linear
                                               : powerlaw::Spacing::log);
    if (args.field) samples = powerlaw::field_transform(samples);

    json results;
    results["phi_lo"] = args.phi_lo;
    results["phi_hi"] = args.phi_hi;
    results["points"] = args.points;
    results["spacing"] = args.linear ? "linear" : "log";
    results["field"] = args.field;
    std::vector<std::string> warnings;

    if (args.fit_opt->count() > 0) {
        auto [lo, hi] = parse_pair(args.fit_window, "--fit-window");
        if (!(lo > 0.0) || !(lo < hi)) throw UsageError("--fit-window needs 0 < lo < hi");
        if (args.field) {
            lo = std::sqrt(lo);
            hi = std::sqrt(hi);
        }
        const auto fit = powerlaw::fit_slope(samples, lo, hi);
        results["fit"] = {{"slope", fit.slope},
                          {"window", {fit.phi_lo, fit.phi_hi}},
                          {"residual", fit.residual}};
        if (fit.residual > 0.05)
            warnings.push_back("fit residual " + format_scientific(fit.residual) +
                               " indicates curvature (exponential truncation); the window is "
                               "not in the power-law regime");
    } else {
        results["fit"] = nullptr;
    }
    results["warnings"] = warnings;

    std::string tsv;
    for (const auto& s : samples)
        tsv += format_scientific(s.ln_phi) + "\t" + format_scientific(s.ln_n) + "\n";

    bool tsv_to_stdout = false;
    if (args.out_opt->count() > 0) {
        results["out"] = args.out;
        if (args.out == "-")
            tsv_to_stdout = true;
        else
            write_text_file(args.out, tsv);
    } else {
        results["out"] = nullptr;
    }

    json params;
    params["phi_lo"] = args.phi_lo;
    params["phi_hi"] = args.phi_hi;
    params["points"] = args.points;
    params["linear"] = args.linear;
    params["field"] = args.field;
    if (args.fit_opt->count() > 0) params["fit_window"] = args.fit_window;
    if (args.out_opt->count() > 0) params["out"] = args.out;

    const json report = cli::make_report("powerlaw", params, std::nullopt, results);
    if (tsv_to_stdout) {
        std::cout << tsv;
        cli::print_report(report, /*to_stderr=*/true);
        return json();
    }
    return report;
}

// ------------------------------------------------------------- simulate --

struct SimulateArgs {
    std::uint64_t modes = 0;
    std::uint64_t quanta = 0;
    std::uint64_t steps = 0;
    std::uint64_t burn_in = 0;
    std::uint64_t seed = 0;
    std::string init = "uniform";
    bool benford_digits = false;
    std::string trajectory;
    std::size_t replicas = 1;
    CLI::Option *burn_opt = nullptr, *seed_opt = nullptr, *traj_opt = nullptr;
};

json run_simulate(const SimulateArgs& args) {
    sim::SimConfig config;
    config.modes = args.modes;
    config.quanta = args.quanta;
    config.steps = args.steps;
    config.burn_in = args.burn_opt->count() > 0 ? args.burn_in : args.steps / 10;
    config.seed = seed_or_env(args.seed_opt, args.seed);
    if (args.init == "uniform")
        config.init = sim::Init::uniform;
    else if (args.init == "all_in_one")
        config.init = sim::Init::all_in_one;
    else
        throw UsageError("--init must be uniform or all_in_one");
    if (args.replicas < 1) throw UsageError("--replicas must be >= 1");
    if (args.traj_opt->count() > 0 && args.replicas > 1)
        throw UsageError("--trajectory records a single chain; drop --replicas");

    try {
        sim::validate(config);
        if (config.steps - config.burn_in < config.modes)
            throw std::domain_error("fewer than one snapshot after burn-in");
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }

    sim::OccupancySummary summary;
    if (args.traj_opt->count() > 0) {
        std::ofstream trajectory(args.trajectory, std::ios::binary);
        if (!trajectory) throw std::runtime_error("cannot write '" + args.trajectory + "'");
        const auto observer = [&trajectory](const sim::SimState& state) {
            std::map<std::uint64_t, std::uint64_t> histogram;
            for (std::uint64_t n : state.occupancies) ++histogram[n];
            for (const auto& [value, count] : histogram)
                trajectory << state.step_count << "\t" << value << "\t" << count << "\n";
        };
        summary = sim::run(config, observer);
    } else {
        summary = sim::run_replicas(config, args.replicas);
    }

    json histogram;
    for (std::size_t v = 0; v < summary.histogram.size(); ++v)
        if (summary.histogram[v] > 0) histogram[std::to_string(v)] = summary.histogram[v];

    json results;
    results["modes"] = config.modes;
    results["quanta"] = config.quanta;
    results["steps"] = config.steps;
    results["burn_in"] = config.burn_in;
    results["init"] = args.init;
    results["replicas"] = args.replicas;
    results["stride"] = config.modes;
    results["snapshots"] = summary.snapshots;
    results["mean_occupancy"] = summary.mean;
    results["phi_hat"] =
        summary.mean > 0.0 ? json(phi_of_occupancy(summary.mean).value()) : json();
    results["tv_distance_to_geometric"] = summary.tv_distance;
    results["histogram"] = histogram;
    results["trajectory"] = args.traj_opt->count() > 0 ? json(args.trajectory) : json();

    if (args.benford_digits) {
        const auto digit_hist = sim::benford_of_histogram(summary.histogram);
        const auto conformance = benford::conformance(digit_hist, benford::pmf(10));
        json digits = json::array();
        for (std::size_t d = 0; d < digit_hist.counts.size(); ++d)
            digits.push_back({{"digit", d + 1}, {"observed", digit_hist.counts[d]}});
        // exploratory: occupancies are geometric, not digit-mode built,
        // so conformance is reported without a verdict threshold claim
        results["benford"] = {{"digits", digits},
                              {"total", digit_hist.total},
                              {"mad", conformance.mad},
                              {"chi2", conformance.chi2},
                              {"verdict", benford::to_string(conformance.verdict)}};
    } else {
        results["benford"] = nullptr;
    }

    json params;
    params["modes"] = args.modes;
    params["quanta"] = args.quanta;
    params["steps"] = args.steps;
    params["burn_in"] = config.burn_in;
    params["seed"] = config.seed;
    params["init"] = args.init;
    params["replicas"] = args.replicas;
    params["benford_digits"] = args.benford_digits;
    if (args.traj_opt->count() > 0) params["trajectory"] = args.trajectory;

    return cli::make_report("simulate", params, std::nullopt, results,
                            cli::RngInfo{sim::kRngAlgorithm, sim::kRngVersion, config.seed});
}

// --------------------------------------------------------------- carnot --

struct CarnotArgs {
    double kappa = 0.0;
    double amp_low = 0.0;
    double amp_high = 0.0;
    double t_low = 0.0;
    double t_high = 0.0;
    bool table1 = false;
    double phi = 0.0;
    double freq_hz = 0.0;
    double waste_fraction = 0.0;
    CLI::Option *kappa_opt = nullptr, *amp_low_opt = nullptr, *amp_high_opt = nullptr,
                *t_low_opt = nullptr, *t_high_opt = nullptr, *phi_opt = nullptr,
                *freq_opt = nullptr, *waste_opt = nullptr;
};

json regime_to_json(const carnot::RegimeSummary& summary) {
    return {{"regime", summary.regime},
            {"applicable", summary.applicable},
            {"temperature_k", finite_or_null(summary.temperature_kelvin)},
            {"equilibrium_p", summary.equilibrium_fraction},
            {"avg_mode_entropy_kb", summary.avg_mode_entropy_kb},
            {"distribution", summary.distribution},
            {"carnot_role", summary.carnot_role}};
}

json run_carnot(const CarnotArgs& args) {
    const bool amp_mode = args.kappa_opt->count() > 0 || args.amp_low_opt->count() > 0 ||
                          args.amp_high_opt->count() > 0;
    const bool temp_mode = args.t_low_opt->count() > 0 || args.t_high_opt->count() > 0;
    const bool table_mode = args.table1;
    const int groups = (amp_mode ? 1 : 0) + (temp_mode ? 1 : 0) + (table_mode ? 1 : 0);
    if (groups != 1)
        throw UsageError("give exactly one of: --kappa/--amp-low/--amp-high, "
                         "--t-low/--t-high, or --table1 --phi --freq-hz");

    const PhysicalConstants consts;
    json params, results;

    if (amp_mode) {
        if (args.kappa_opt->count() == 0 || args.amp_low_opt->count() == 0 ||
            args.amp_high_opt->count() == 0)
            throw UsageError("amplification needs --kappa, --amp-low and --amp-high");
        if (args.waste_opt->count() > 0 &&
            !(args.waste_fraction >= 0.0 && args.waste_fraction < 1.0))
            throw UsageError("--waste-fraction must lie in [0, 1)");

        const double e_low = carnot::hook_energy({args.kappa, args.amp_low});
        const double e_high = carnot::hook_energy({args.kappa, args.amp_high});
        const double work = carnot::min_work(e_low, e_high);
        const double t_low = carnot::oscillator_temperature(e_low, consts);
        const double t_high = carnot::oscillator_temperature(e_high, consts);

        results["energy_low_j"] = e_low;
        results["energy_high_j"] = e_high;
        results["t_low_k"] = t_low;
        results["t_high_k"] = t_high;
        results["min_work_j"] = work;
        results["carnot_efficiency"] =
            e_low > 0.0 ? json(carnot::carnot_efficiency(t_low, t_high)) : json();
        // what-if extension: a fraction of the applied work misses the
        // resonance and heats the bath instead
        results["waste_fraction"] = args.waste_fraction;
        const double applied = work / (1.0 - args.waste_fraction);
        results["applied_work_j"] = applied;
        results["wasted_work_j"] = applied - work;

        params["kappa"] = args.kappa;
        params["amp_low"] = args.amp_low;
        params["amp_high"] = args.amp_high;
        if (args.waste_opt->count() > 0) params["waste_fraction"] = args.waste_fraction;
    } else if (temp_mode) {
        if (args.t_low_opt->count() == 0 || args.t_high_opt->count() == 0)
            throw UsageError("give both --t-low and --t-high");
        results["t_low_k"] = args.t_low;
        results["t_high_k"] = args.t_high;
        results["carnot_efficiency"] = carnot::carnot_efficiency(args.t_low, args.t_high);
        params["t_low"] = args.t_low;
        params["t_high"] = args.t_high;
    } else {
        if (args.phi_opt->count() == 0 || args.freq_opt->count() == 0)
            throw UsageError("--table1 needs --phi and --freq-hz");
        const PhiRatio phi(args.phi);
        const auto [high, canonic] = carnot::table1_summary(phi, args.freq_hz, consts);
        results["phi"] = args.phi;
        results["freq_hz"] = args.freq_hz;
        results["occupancy"] = occupancy(phi);
        results["high_occupation"] = regime_to_json(high);
        results["canonic"] = regime_to_json(canonic);
        std::vector<std::string> warnings;
        if (!high.applicable && !canonic.applicable)
            warnings.push_back("neither limit applies at this phi (0.01 < n < 100); "
                               "treat both columns as extrapolations");
        results["warnings"] = warnings;
        params["table1"] = true;
        params["phi"] = args.phi;
        params["freq_hz"] = args.freq_hz;
    }

    return cli::make_report("carnot", params, std::nullopt, results);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bose-Einstein mode statistics, file entropy, Benford conformance,\n"
                 "power-law curves, equilibrium simulation and Carnot relations.\n"
                 "Each subcommand prints a reproducible JSON report."};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    ModesArgs modes_args;
    auto* modes_cmd = app.add_subcommand(
        "modes", "Occupancy, phi, temperature and entropy of a single mode");
    modes_args.phi_opt = modes_cmd->add_option("--phi", modes_args.phi, "phi = h nu / k_B T");
    modes_args.n_opt = modes_cmd->add_option("--n", modes_args.n, "mode occupancy");
    modes_args.freq_opt =
        modes_cmd->add_option("--freq-hz", modes_args.freq_hz, "mode frequency [Hz]");
    modes_args.temp_opt =
        modes_cmd->add_option("--temp-k", modes_args.temp_k, "source temperature [K]");
    modes_cmd->add_option("--regime", modes_args.regime,
                          "entropy regime: auto, quantum, classical or exact");

    EntropyArgs entropy_args;
    auto* entropy_cmd = app.add_subcommand(
        "entropy", "Shannon information and H-function of a binary file");
    entropy_args.file_opt = entropy_cmd->add_option(
        "--file", entropy_args.file, "bitstream file of ASCII 0/1 ('-' for stdin)");
    entropy_cmd->add_flag("--raw", entropy_args.raw, "unpack file bytes MSB-first instead");
    entropy_args.lambda_opt =
        entropy_cmd->add_option("--lambda", entropy_args.lambda, "file length in modes");
    entropy_args.ones_opt =
        entropy_cmd->add_option("--ones", entropy_args.ones, "count of energetic bits");
    entropy_cmd->add_option("--method", entropy_args.method, "stirling or exact");
    entropy_cmd->add_option("--units", entropy_args.units, "nats or bits");
    entropy_cmd->add_option("--m", entropy_args.m, "k_B multiples per bit (Clausius bound)");

    BenfordArgs benford_args;
    auto* benford_cmd = app.add_subcommand(
        "benford", "First-digit conformance of a dataset against the equilibrium law");
    benford_args.file_opt = benford_cmd->add_option(
        "--file", benford_args.file, "newline-delimited decimal values ('-' for stdin)");
    benford_args.csv_opt = benford_cmd->add_option("--csv", benford_args.csv, "CSV file");
    benford_args.column_opt = benford_cmd->add_option(
        "--column", benford_args.column, "CSV column: header name or 0-based index");
    benford_cmd->add_option("--base", benford_args.base, "digit base (default 10)");
    benford_args.emit_opt = benford_cmd->add_option(
        "--emit-pmf", benford_args.emit_pmf, "write the theoretical pmf TSV ('-' for stdout)");
    benford_args.thresholds_opt = benford_cmd->add_option(
        "--thresholds", benford_args.thresholds, "MAD verdict cutoffs 'close,acceptable'");

    PowerlawArgs powerlaw_args;
    auto* powerlaw_cmd = app.add_subcommand(
        "powerlaw", "Log-log occupancy curve with OLS slope fits");
    powerlaw_cmd->add_option("--phi-lo", powerlaw_args.phi_lo, "lower phi bound")->required();
    powerlaw_cmd->add_option("--phi-hi", powerlaw_args.phi_hi, "upper phi bound")->required();
    powerlaw_cmd->add_option("--points", powerlaw_args.points, "sample count (default 200)");
    powerlaw_cmd->add_flag("--linear", powerlaw_args.linear, "linear phi spacing (default log)");
    powerlaw_cmd->add_flag("--field", powerlaw_args.field,
                           "abscissa as field amplitude: slopes double");
    powerlaw_args.fit_opt = powerlaw_cmd->add_option(
        "--fit-window", powerlaw_args.fit_window, "OLS window 'lo,hi' in phi");
    powerlaw_args.out_opt = powerlaw_cmd->add_option(
        "--out", powerlaw_args.out, "TSV output path ('-' for stdout)");

    SimulateArgs simulate_args;
    auto* simulate_cmd = app.add_subcommand(
        "simulate", "Monte-Carlo quanta exchange toward the geometric equilibrium");
    simulate_cmd->add_option("--modes", simulate_args.modes, "mode count M")->required();
    simulate_cmd->add_option("--quanta", simulate_args.quanta, "conserved quanta Q")->required();
    simulate_cmd->add_option("--steps", simulate_args.steps, "total steps")->required();
    simulate_args.burn_opt = simulate_cmd->add_option(
        "--burn-in", simulate_args.burn_in, "steps to discard (default steps/10)");
    simulate_args.seed_opt = simulate_cmd->add_option(
        "--seed", simulate_args.seed, "RNG seed (default $ENTROPY_MODES_SEED or 0)");
    simulate_cmd->add_option("--init", simulate_args.init, "uniform or all_in_one");
    simulate_cmd->add_flag("--benford-digits", simulate_args.benford_digits,
                           "also report first digits of the occupancies");
    simulate_args.traj_opt = simulate_cmd->add_option(
        "--trajectory", simulate_args.trajectory,
        "write per-snapshot histogram TSV (step, occupancy, count)");
    simulate_cmd->add_option("--replicas", simulate_args.replicas,
                             "independent chains with derived seeds (default 1)");

    CarnotArgs carnot_args;
    auto* carnot_cmd = app.add_subcommand(
        "carnot", "Oscillator energetics, amplification work and the regime table");
    carnot_args.kappa_opt =
        carnot_cmd->add_option("--kappa", carnot_args.kappa, "spring constant [N/m]");
    carnot_args.amp_low_opt =
        carnot_cmd->add_option("--amp-low", carnot_args.amp_low, "initial amplitude [m]");
    carnot_args.amp_high_opt =
        carnot_cmd->add_option("--amp-high", carnot_args.amp_high, "target amplitude [m]");
    carnot_args.t_low_opt =
        carnot_cmd->add_option("--t-low", carnot_args.t_low, "cold temperature [K]");
    carnot_args.t_high_opt =
        carnot_cmd->add_option("--t-high", carnot_args.t_high, "hot temperature [K]");
    carnot_cmd->add_flag("--table1", carnot_args.table1, "print both regime columns at --phi");
    carnot_args.phi_opt = carnot_cmd->add_option("--phi", carnot_args.phi, "phi for --table1");
    carnot_args.freq_opt =
        carnot_cmd->add_option("--freq-hz", carnot_args.freq_hz, "frequency for --table1");
    carnot_args.waste_opt = carnot_cmd->add_option(
        "--waste-fraction", carnot_args.waste_fraction,
        "off-resonance loss fraction in [0,1) (what-if extension)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        json report;
        if (modes_cmd->parsed())
            report = run_modes(modes_args);
        else if (entropy_cmd->parsed())
            report = run_entropy(entropy_args);
        else if (benford_cmd->parsed())
            report = run_benford(benford_args);
        else if (powerlaw_cmd->parsed())
            report = run_powerlaw(powerlaw_args);
        else if (simulate_cmd->parsed())
            report = run_simulate(simulate_args);
        else if (carnot_cmd->parsed())
            report = run_carnot(carnot_args);
        if (!report.is_null()) cli::print_report(report);
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
