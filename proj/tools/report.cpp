#include "report.hpp"

#include <iostream>

#include "emodes/version.hpp"

namespace emodes::cli {

nlohmann::json make_report(const std::string& command, nlohmann::json params,
                           std::optional<std::string> input_digest, nlohmann::json results,
                           std::optional<RngInfo> rng) {
    nlohmann::json report;
    report["command"] = command;
    report["version"] = kVersion;
    report["params"] = std::move(params);
    report["input_digest"] = input_digest ? nlohmann::json(*input_digest) : nlohmann::json();
    report["results"] = std::move(results);
    if (rng)
        report["rng"] = {{"algorithm", rng->algorithm},
                         {"version", rng->version},
                         {"seed", rng->seed}};
    else
        report["rng"] = nullptr;
    return report;
}

void print_report(const nlohmann::json& report, bool to_stderr) {
    (to_stderr ? std::cerr : std::cout) << report.dump(2) << "\n";
}

}  // namespace emodes::cli
