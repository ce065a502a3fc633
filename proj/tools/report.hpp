#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace emodes::cli {

struct RngInfo {
    std::string algorithm;
    std::string version;
    std::uint64_t seed;
};

// Report envelope: {command, version, params, input_digest, results, rng}.
// Everything inside is reproducible from (params, seed); nothing
// time- or host-dependent goes in.
nlohmann::json make_report(const std::string& command, nlohmann::json params,
                           std::optional<std::string> input_digest, nlohmann::json results,
                           std::optional<RngInfo> rng = std::nullopt);

void print_report(const nlohmann::json& report, bool to_stderr = false);

}  // namespace emodes::cli
